#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "iso/error.hpp"

namespace iso {

// All geometry is exact. Rat is an arbitrary-precision rational kept in
// lowest terms with positive denominator; Int is an arbitrary-precision
// integer. Doubles appear only in reporting layers, never in predicates.
using Rat = mpq_class;
using Int = mpz_class;
using QVec = std::vector<Rat>;

// Parses "num/den" or "num" (base 10, optional sign). Rejects empty or
// malformed strings and zero denominators.
Rat rat_from_string(const std::string& s);

// Canonical text form: plain integer when den == 1, otherwise "num/den".
std::string rat_to_string(const Rat& q);

Rat rat_pow(const Rat& q, unsigned e);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// Narrowing conversion that refuses to lose information.
std::int64_t int_to_i64(const Int& z);

double to_double(const Rat& q);

Rat dot(const QVec& a, const QVec& b);

// Encloses v^(1/d) for v >= 0 in [lo, hi] with hi - lo <= 1/scale.
// When v is the exact d-th power of a multiple of 1/scale, lo == hi and
// exact is set.
struct RootBounds {
    Rat lo;
    Rat hi;
    bool exact = false;
};
RootBounds nth_root_bounds(const Rat& v, unsigned d, const Int& scale);

// Exact sign of (m^(1/d) + slack) - x^(1/d) - y^(1/d) for m, x, y >= 0 and
// slack in {0, 1}. Decides equality through d-th-power-free decompositions
// (two sums of real d-th roots of integers coincide only when they match
// radical by radical), so interval refinement always terminates.
int cmp_root_sum(const Int& m, const Int& x, const Int& y, unsigned d, unsigned slack = 0);

}  // namespace iso
