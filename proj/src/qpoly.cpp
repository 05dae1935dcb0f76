#include "heckekron/qpoly.hpp"

#include <ostream>
#include <sstream>

#include "heckekron/errors.hpp"

namespace heckekron {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coefficient) {
  LaurentPoly f;
  f.add_term(exponent, coefficient);
  return f;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::is_bar_invariant() const {
  for (const auto& [k, c] : terms_)
    if (coefficient(-k) != c) return false;
  return true;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& [k, c] : terms_)
    if (c < 0) return false;
  return true;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly f;
  for (const auto& [e, c] : terms_) f.terms_.emplace_hint(f.terms_.end(), e + k, c);
  return f;
}

LaurentPoly LaurentPoly::dilated(int factor) const {
  if (factor < 1) throw DomainError("dilation factor must be positive");
  LaurentPoly f;
  for (const auto& [e, c] : terms_) f.add_term(e * factor, c);
  return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly f;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) f.add_term(ka + kb, ca * cb);
  return f;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f;
  for (const auto& [k, c] : terms_) f.terms_.emplace(k, -c);
  return f;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c == -1)
      os << '-';
    else if (c != 1)
      os << c << '*';
    os << 't';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) {
  return os << f.str();
}

LaurentPoly quantum_integer(int n) {
  if (n < 0) throw DomainError("quantum integer of a negative number");
  LaurentPoly f;
  for (int j = 0; j < n; ++j) f.add_term(2 * j - (n - 1), 1);
  return f;
}

LaurentPoly quantum_factorial(int n) {
  LaurentPoly f = 1;
  for (int m = 2; m <= n; ++m) f *= quantum_integer(m);
  return f;
}

LaurentPoly quantum_factorial(const Composition& c) {
  LaurentPoly f = 1;
  for (int entry : c) {
    if (entry < 0) throw DomainError("composition entries must be non-negative");
    if (entry > 1) f *= quantum_factorial(entry);
  }
  return f;
}

LaurentPoly quantum_binomial(int a, int b) {
  if (b < 0 || b > a) throw DomainError("quantum binomial needs a >= b >= 0");
  return exact_divide(quantum_factorial(a),
                      quantum_factorial(b) * quantum_factorial(a - b));
}

LaurentPoly dilated_quantum_factorial(const Composition& c) {
  return quantum_factorial(c).dilated(2);
}

LaurentPoly bar(const LaurentPoly& f) {
  LaurentPoly g;
  for (const auto& [k, c] : f.terms()) g.add_term(-k, c);
  return g;
}

BarSplit bar_split(const LaurentPoly& f) {
  BarSplit split;
  for (const auto& [k, c] : f.terms()) {
    if (k > 0) continue;
    split.bar_invariant.add_term(k, c);
    if (k < 0) split.bar_invariant.add_term(-k, c);
  }
  split.positive = f - split.bar_invariant;
  if (!split.positive.is_zero() && split.positive.min_exponent() < 1)
    throw InvariantViolation("bar_split: residual has non-positive exponent");
  if (!split.bar_invariant.has_nonnegative_coefficients() ||
      !split.positive.has_nonnegative_coefficients())
    throw InvariantViolation("bar_split: negative coefficient in " + f.str());
  return split;
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return {};
  const int gmin = g.min_exponent();
  const int gmax = g.max_exponent();
  const BigInt& lead = g.terms().rbegin()->second;
  LaurentPoly remainder = f;
  LaurentPoly quotient;
  while (!remainder.is_zero() &&
         remainder.max_exponent() - remainder.min_exponent() >= gmax - gmin) {
    const int top = remainder.max_exponent();
    const BigInt& c = remainder.terms().rbegin()->second;
    if (c % lead != 0) break;
    LaurentPoly term = LaurentPoly::monomial(top - gmax, c / lead);
    quotient += term;
    remainder -= term * g;
  }
  if (!remainder.is_zero())
    throw InvariantViolation("exact_divide: " + g.str() + " does not divide " +
                             f.str());
  return quotient;
}

}  // namespace heckekron
