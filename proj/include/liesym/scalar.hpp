#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace liesym {

/// Exact rational number. Values are kept in lowest terms with a positive
/// denominator; arithmetic never rounds. This is the only number type used
/// by the geometric code.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Scalar(int n) : v_(static_cast<signed long>(n)) {}   // NOLINT
  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  /// Strict parser: optional sign, decimal integer, optionally "/" followed
  /// by a positive decimal integer. Anything else (floats in particular) is
  /// rejected with invalid_input.
  static Scalar parse(std::string_view text);

  std::string str() const;  // "p" or "p/q"
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  Scalar abs() const;
  Scalar inverse() const;  // throws invalid_input on zero

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws invalid_input on zero divisor

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) >= 0; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact binomial coefficient C(n, k).
Scalar binomial(unsigned n, unsigned k);

}  // namespace liesym
