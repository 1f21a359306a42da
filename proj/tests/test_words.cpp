#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "catbij/word.hpp"
#include "oracles.hpp"

using namespace catbij;

namespace {
BinaryWord W(const char* s) { return BinaryWord::parse(s); }
} // namespace

TEST(Words, DescentSetAndMaj)
{
    EXPECT_EQ(descent_set(W("00100111010011")), (PositionSet{3, 8, 10}));
    EXPECT_EQ(maj(W("00100111010011")), 21);
    EXPECT_TRUE(descent_set(W("000111")).empty());
    EXPECT_EQ(descent_set(W("0101")), (PositionSet{2}));
    EXPECT_EQ(maj(W("0101")), 2);
    EXPECT_EQ(maj(W("0000000")), 0);
    EXPECT_EQ(maj(W("")), 0);
}

TEST(Words, Invert)
{
    EXPECT_EQ(invert(W("00100111010011")).str(), "00110100011011");
    EXPECT_EQ(invert(W("0011")).str(), "0011");
    EXPECT_EQ(invert(W("010011")).str(), "001101");
    EXPECT_EQ(descent_set(invert(W("00100111010011"))), (PositionSet{4, 6, 11}));
}

TEST(Words, Pattern01Positions)
{
    EXPECT_EQ(pattern01_positions(W("0010011")), (PositionSet{2, 5}));
    EXPECT_EQ(pattern01_positions(W("0011010")), (PositionSet{2, 5}));
    EXPECT_TRUE(pattern01_positions(W("00000")).empty());
}

TEST(Words, ParseRejectsJunk)
{
    EXPECT_THROW(BinaryWord::parse("0120"), InvalidInput);
    EXPECT_THROW(CatalanWord::parse("011"), InvalidInput);
    EXPECT_THROW(CatalanWord::parse("0110"), InvalidInput);
    EXPECT_THROW(CatalanWord::parse("0001"), InvalidInput);
    EXPECT_THROW(HalfWord::parse("10"), InvalidInput);
    EXPECT_NO_THROW(CatalanWord::parse(""));
}

TEST(Words, ConcatAndSplit)
{
    const auto w = concat_pair(HalfWord::parse("0010011"), HalfWord::parse("0011010"));
    EXPECT_EQ(w.str(), "00100111010011");
    EXPECT_EQ(concat_pair(HalfWord::parse("00"), HalfWord::parse("00")).str(), "0011");
    EXPECT_EQ(concat_pair(HalfWord::parse("01"), HalfWord::parse("01")).str(), "0101");

    auto [a, b] = split_pair(w);
    EXPECT_EQ(a.str(), "0010011");
    EXPECT_EQ(b.str(), "0011010");
    auto [c, d] = split_pair(CatalanWord::parse("0011"));
    EXPECT_EQ(c.str(), "00");
    EXPECT_EQ(d.str(), "00");

    EXPECT_THROW(concat_pair(HalfWord::parse("00"), HalfWord::parse("000")), InvalidInput);
    EXPECT_THROW(concat_pair(HalfWord::parse("00"), HalfWord::parse("01")), InvalidInput);
}

TEST(Words, ConcatSwapIsInversion)
{
    for (int n = 0; n <= 8; ++n)
        for (int j = 0; 2 * j <= n; ++j) {
            const auto hw = enumerate_halfwords(n, j);
            for (const auto& a : hw)
                for (const auto& b : hw) EXPECT_EQ(concat_pair(b, a), invert(concat_pair(a, b)));
        }
}

TEST(Words, EnumerateCatalanMatchesFilterOracle)
{
    const auto counts = oracle::catalan_numbers(10);
    for (int n = 0; n <= 8; ++n) {
        const auto words = enumerate_catalan(n);
        const auto expected = oracle::catalan_words(n);
        ASSERT_EQ(words.size(), expected.size()) << "n=" << n;
        EXPECT_EQ(static_cast<long long>(words.size()), counts[static_cast<std::size_t>(n)]);
        for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(words[i].str(), oracle::str(expected[i]));
    }
    ASSERT_EQ(enumerate_catalan(2).size(), 2U);
    EXPECT_EQ(enumerate_catalan(2)[0].str(), "0011");
    EXPECT_EQ(enumerate_catalan(2)[1].str(), "0101");
    EXPECT_EQ(enumerate_catalan(0).size(), 1U);
    EXPECT_EQ(enumerate_catalan(3).size(), 5U);
    EXPECT_EQ(static_cast<long long>(enumerate_catalan(10).size()), counts[10]);
}

TEST(Words, EnumerateHalfwordsMatchesFilterOracle)
{
    for (int n = 0; n <= 10; ++n)
        for (int j = 0; 2 * j <= n; ++j) {
            const auto got = enumerate_halfwords(n, j);
            const auto expected = oracle::half_words(n, j);
            ASSERT_EQ(got.size(), expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].str(), oracle::str(expected[i]));
        }
    EXPECT_TRUE(enumerate_halfwords(4, 3).empty());
}

TEST(Words, FamilyExamples)
{
    const auto fam = enumerate_family(FamilyKey{7, 3, {2, 5}});
    ASSERT_EQ(fam.size(), 2U);
    EXPECT_EQ(fam[0].str(), "0010011");
    EXPECT_EQ(fam[1].str(), "0011010");

    const auto zero = enumerate_family(FamilyKey{2, 0, {}});
    ASSERT_EQ(zero.size(), 1U);
    EXPECT_EQ(zero[0].str(), "00");

    // Oracle over all 16 words of length 4: a ballot word with one 1 always has
    // a 01 factor, so the family with P = {} is empty.
    std::size_t oracle_count = 0;
    for (const auto& b : oracle::all_words(4))
        if (oracle::prefix_ok(b) && oracle::count_ones(b) == 1 && oracle::pattern01(b).empty()) ++oracle_count;
    EXPECT_EQ(oracle_count, 0U);
    EXPECT_TRUE(enumerate_family(FamilyKey{4, 1, {}}).empty());
}

TEST(Words, FamilyKeyValidation)
{
    EXPECT_THROW(enumerate_family(FamilyKey{4, 1, {1, 3}}), InvalidInput);
    EXPECT_THROW(enumerate_family(FamilyKey{4, 2, {3, 1}}), InvalidInput);
    EXPECT_THROW(enumerate_family(FamilyKey{4, 2, {0}}), InvalidInput);
    EXPECT_THROW(enumerate_family(FamilyKey{4, 2, {4}}), InvalidInput);
}

TEST(Words, FamiliesPartitionHalfwordsAndFillsAreNonIncreasing)
{
    for (int n = 1; n <= 10; ++n)
        for (int j = 0; 2 * j <= n; ++j) {
            std::set<PositionSet> keys;
            for (const auto& w : enumerate_halfwords(n, j)) keys.insert(pattern01_positions(w.word()));
            std::size_t covered = 0;
            for (const auto& p : keys) {
                const auto fam = enumerate_family(FamilyKey{n, j, p});
                covered += fam.size();
                for (const auto& w : fam) {
                    // segments between anchors read 1...10...0
                    const auto& bits = w.word();
                    for (std::size_t t = 0; t < p.size(); ++t) {
                        const int first = p[t] + 2;
                        const int last = t + 1 < p.size() ? p[t + 1] - 1 : n;
                        for (int i = first; i < last; ++i) EXPECT_FALSE(bits.at(i) == 0 && bits.at(i + 1) == 1);
                    }
                }
            }
            EXPECT_EQ(covered, enumerate_halfwords(n, j).size());
        }
}

TEST(Words, MajInversionRelationOnCatalanWords)
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& w : enumerate_catalan(n))
            EXPECT_EQ(maj(invert(w.word())), 2L * n * des(w.word()) - maj(w.word())) << w.str();
}

TEST(Words, InvertIsInvolutionOnRandomWords)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::uint8_t> bits(rng() % 40);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
        const BinaryWord w(bits);
        EXPECT_EQ(invert(invert(w)), w);
        EXPECT_EQ(w.size(), invert(w).size());
    }
    for (int n = 0; n <= 7; ++n) {
        std::set<CatalanWord> image;
        for (const auto& w : enumerate_catalan(n)) image.insert(invert(w));
        EXPECT_EQ(image.size(), enumerate_catalan(n).size());
    }
}

TEST(Words, SplitConcatRoundTrip)
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& w : enumerate_catalan(n)) {
            const auto [a, b] = split_pair(w);
            EXPECT_EQ(a.ones(), b.ones());
            EXPECT_EQ(concat_pair(a, b), w);
        }
}
