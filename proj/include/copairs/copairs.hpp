#pragma once

// Exact counting of gcd-constrained integer tuples, certified
// Euler-product constants, and empirical validation of their asymptotics.

#include "copairs/asymptotics.hpp"
#include "copairs/constants.hpp"
#include "copairs/errors.hpp"
#include "copairs/exact_counts.hpp"
#include "copairs/graph.hpp"
#include "copairs/int128.hpp"
#include "copairs/numeric.hpp"
#include "copairs/output.hpp"
#include "copairs/sieve.hpp"
#include "copairs/verify.hpp"
#include "copairs/version.hpp"
