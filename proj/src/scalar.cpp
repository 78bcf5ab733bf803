#include "liesym/scalar.hpp"

#include <cctype>
#include <ostream>

#include "liesym/errors.hpp"

namespace liesym {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  // [+-]? digits ( "/" digits )?, denominator nonzero
  auto fail = [&] {
    throw invalid_input("not a rational literal: \"" + std::string(text) +
                        "\" (expected p or p/q with decimal integers, q > 0)");
  };
  if (text.empty()) fail();
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  std::size_t num_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_start) fail();
  // mpz_set_str rejects a leading '+'
  std::string num(text.substr(text[0] == '+' ? 1 : 0, text[0] == '+' ? pos - 1 : pos));
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) fail();
    den = std::string(text.substr(den_start));
  }
  mpz_class d(den);
  if (d == 0) fail();
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(v_))); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw invalid_input("inverse of zero");
  return Scalar(mpq_class(1) / v_);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_)); }

Scalar& Scalar::operator+=(const Scalar& o) {
  v_ += o.v_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  v_ -= o.v_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  v_ *= o.v_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw invalid_input("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Scalar(mpq_class(b));
}

}  // namespace liesym
