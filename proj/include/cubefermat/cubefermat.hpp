#pragma once

// Umbrella header: everything needed to decide solvability of
// x^3 + y^3 = z^3 in quadratic fields and to verify the identities the
// criterion rests on.

#include "arith.hpp"
#include "criterion.hpp"
#include "curve.hpp"
#include "identities.hpp"
#include "lfunction.hpp"
#include "modform.hpp"
#include "qseries.hpp"
#include "theta.hpp"
