#pragma once

#include "stanley/apset.hpp"
#include "stanley/appendix.hpp"
#include "stanley/arith.hpp"
#include "stanley/error.hpp"
#include "stanley/families.hpp"
#include "stanley/residue_set.hpp"
#include "stanley/search.hpp"
#include "stanley/witness.hpp"
