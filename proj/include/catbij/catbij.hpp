#pragma once

#include "catbij/bijection.hpp"
#include "catbij/errors.hpp"
#include "catbij/laurent.hpp"
#include "catbij/permutation.hpp"
#include "catbij/qseries.hpp"
#include "catbij/rsk.hpp"
#include "catbij/tableau.hpp"
#include "catbij/verify.hpp"
#include "catbij/word.hpp"
