#include "rootpoly/numbers.hpp"

#include <sstream>

namespace rp {

Int binomial(const Int& top, int bottom) {
  if (bottom < 0 || top < bottom) return 0;
  Int num = 1;
  Int den = 1;
  for (int i = 0; i < bottom; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

void make_primitive(IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (Int& x : v) x /= g;
}

IntVec primitive_integer(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(lcm);
    scaled.canonicalize();
    out[i] = scaled.get_num();
  }
  make_primitive(out);
  return out;
}

void canonical_sign(IntVec& v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    return;
  }
}

bool is_zero_vec(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace rp
