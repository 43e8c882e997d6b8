#pragma once

#include "rauzy/alphabet.hpp"
#include "rauzy/blocks.hpp"
#include "rauzy/classes.hpp"
#include "rauzy/error.hpp"
#include "rauzy/group.hpp"
#include "rauzy/insertions.hpp"
#include "rauzy/invariants.hpp"
#include "rauzy/moves.hpp"
#include "rauzy/pair.hpp"
#include "rauzy/permutation.hpp"
#include "rauzy/search.hpp"
