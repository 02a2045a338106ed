#ifndef DETVAR_DETVAR_HPP
#define DETVAR_DETVAR_HPP

// Umbrella header.

#include "detvar/cli.hpp"
#include "detvar/det_variety.hpp"
#include "detvar/exact_sequence.hpp"
#include "detvar/graded.hpp"
#include "detvar/output.hpp"
#include "detvar/point_count.hpp"
#include "detvar/polynomial.hpp"
#include "detvar/spaces.hpp"
#include "detvar/verify.hpp"

#endif  // DETVAR_DETVAR_HPP
