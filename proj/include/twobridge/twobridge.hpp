#pragma once

// Complexity bounds for two-bridge link complements: continued-fraction
// normalization, the pillowcase-spine vertex ledger, closed-form upper and
// lower bounds, and the census machinery.

#include "arith.hpp"
#include "bounds.hpp"
#include "census.hpp"
#include "continued_fraction.hpp"
#include "errors.hpp"
#include "link.hpp"
#include "spine_ledger.hpp"
