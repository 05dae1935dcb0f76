#pragma once

// Laurent polynomials in t with exact integer coefficients, quantum integers
// and the bar involution.

#include <map>
#include <string>

#include "heckekron/bigint.hpp"
#include "heckekron/partitions.hpp"

namespace heckekron {

class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: integers promote implicitly
  static LaurentPoly monomial(int exponent, BigInt coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int exponent) const;
  void add_term(int exponent, const BigInt& coefficient);

  // Only meaningful when non-zero.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  BigInt at_one() const;
  bool is_bar_invariant() const;
  bool has_nonnegative_coefficients() const;

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  /// Substitute t -> t^factor.
  LaurentPoly dilated(int factor) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const = default;

  /// Ascending exponents joined by '+': "t^-1+2+3*t^2"; "0" when zero.
  std::string str() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// Shorthand for the monomial t^k.
inline LaurentPoly tpow(int k) { return LaurentPoly::monomial(k); }

/// [n]_t = t^{1-n} + t^{3-n} + ... + t^{n-1}.
LaurentPoly quantum_integer(int n);
LaurentPoly quantum_factorial(int n);
/// Product of [c_i]_t! over the entries.
LaurentPoly quantum_factorial(const Composition& c);
LaurentPoly quantum_binomial(int a, int b);
/// Quantum factorial with t replaced by t^2.
LaurentPoly dilated_quantum_factorial(const Composition& c);

LaurentPoly bar(const LaurentPoly& f);

struct BarSplit {
  LaurentPoly bar_invariant;
  LaurentPoly positive;  // in t N0[t]
};

/// The unique f = a + b with a bar-invariant in N0[t,t^-1] and b in t N0[t].
/// Throws InvariantViolation if f is not of that form.
BarSplit bar_split(const LaurentPoly& f);

/// q with f = q * g. Throws InvariantViolation if g does not divide f.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace heckekron
