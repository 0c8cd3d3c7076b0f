#include "rootpoly/polynomial.hpp"

#include <sstream>

#include "rootpoly/error.hpp"

namespace rp {

namespace {
const Int kZero = 0;
}

Polynomial::Polynomial(IntVec coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::degree() const {
  return coeffs_.empty() ? kMinusInfinity : int(coeffs_.size()) - 1;
}

const Int& Polynomial::coeff(int i) const {
  if (i < 0 || size_t(i) >= coeffs_.size()) return kZero;
  return coeffs_[i];
}

const Int& Polynomial::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

int Polynomial::lowest_exponent() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return int(i);
  return kMinusInfinity;
}

Int Polynomial::eval(const Int& x) const {
  Int acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::reversed_into_degree(int d) const {
  if (degree() > d)
    throw Error(Errc::negative_exponent,
                "reversal into degree " + std::to_string(d) + " of a degree " +
                    std::to_string(degree()) + " polynomial");
  IntVec out(d + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[d - i] = coeffs_[i];
  return Polynomial(std::move(out));
}

bool Polynomial::is_palindromic() const {
  if (coeffs_.empty()) return true;
  size_t n = coeffs_.size();
  for (size_t i = 0; i < n / 2 + 1; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  IntVec out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return Polynomial();
  IntVec out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(out));
}

bool Polynomial::coefficientwise_leq(const Polynomial& o) const {
  size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  for (size_t i = 0; i < n; ++i)
    if (coeff(int(i)) > o.coeff(int(i))) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace rp
