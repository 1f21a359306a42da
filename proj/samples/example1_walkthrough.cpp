// Walks the permutation 7562143 through the correspondence step by step.

#include <iostream>

#include "catbij/catbij.hpp"
#include "catbij/io.hpp"

int main()
{
    using namespace catbij;

    const auto sigma = Permutation::parse("7 5 6 2 1 4 3");
    const auto pair = rsk(sigma);
    std::cout << "sigma          " << sigma.str() << "  maj " << maj(sigma) << "\n";
    std::cout << "sigma^-1       " << inverse(sigma).str() << "  maj " << maj(inverse(sigma)) << "\n";
    std::cout << "insertion      " << io::to_text(pair.first) << "  descents " << to_string(descent_set(pair.first)) << "\n";
    std::cout << "recording      " << io::to_text(pair.second) << "  descents " << to_string(descent_set(pair.second)) << "\n";

    const auto w1 = tableau_to_halfword(pair.first);
    const auto w2 = tableau_to_halfword(pair.second);
    const auto family = class_translate(7, 3, descent_set(pair.first));
    std::cout << "family         n=" << family.n << " j=" << family.j << " patterns " << to_string(family.patterns) << "\n";
    std::cout << "half-words     " << w1.str() << ", " << w2.str() << "\n";

    const auto w = phi(sigma);
    std::cout << "w              " << w.str() << "  descents " << to_string(descent_set(w.word()))
              << "  maj " << maj(w.word()) << "\n";
    std::cout << "w^-1           " << invert(w).str() << "  descents " << to_string(descent_set(invert(w).word()))
              << "  maj " << maj(invert(w).word()) << "\n";
    std::cout << "phi^-1(w)      " << phi_inverse(w).str() << "\n";
    return 0;
}
