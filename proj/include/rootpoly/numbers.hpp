#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace rp {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// C(top, bottom) with C(t, d) = 0 for t < d or d < 0.
Int binomial(const Int& top, int bottom);

/// Divides an integer vector by the gcd of its entries (zero vector unchanged).
void make_primitive(IntVec& v);

/// Clears denominators and divides by the content, preserving direction.
IntVec primitive_integer(const RatVec& v);

/// Flips the sign so the first nonzero entry is positive. No-op on zero vectors.
void canonical_sign(IntVec& v);

bool is_zero_vec(const IntVec& v);

std::string vec_to_string(const IntVec& v);

}  // namespace rp
