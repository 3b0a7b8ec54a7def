#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "e7tensor/errors.hpp"

namespace e7tensor {

using Int = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial over Q in one indeterminate x.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  explicit Poly(std::vector<Rational> coeffs);  // coeffs[k] multiplies x^k
  static Poly x();
  static Poly monomial(Rational c, int deg);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const;
  bool is_monomial() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  // Quotient and remainder; divisor must be nonzero.
  static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Exact division; errors if the remainder is nonzero.
  static Poly exact_div(const Poly& a, const Poly& b);
  // Monic gcd, computed with a primitive pseudo-remainder sequence to keep
  // coefficient growth in check.
  static Poly gcd(const Poly& a, const Poly& b);

  Rational eval(const Rational& v) const;
  Poly monic() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Reduced fraction of polynomials with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(Poly num, Poly den);  // reduces
  explicit RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  static RatFunc x() { return RatFunc(Poly::x(), Poly(Rational(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Single-term numerator over a single-term denominator (c * x^k, k may be
  // negative through the denominator).
  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  Rational eval(const Rational& v) const;  // errors on a denominator zero
  std::string to_string() const;

 private:
  void reduce();
  Poly num_, den_;
};

enum class Backend { Rational, UniRational };

// An element of the evaluation field: an exact rational, or an exact
// univariate rational function. Mixed arithmetic promotes rationals to
// constant rational functions.
class FieldElement {
 public:
  FieldElement() : v_(Rational(0)) {}
  FieldElement(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(RatFunc f) : v_(std::move(f)) {}   // NOLINT(google-explicit-constructor)
  static FieldElement integer(long n) { return FieldElement(Rational(n)); }
  static FieldElement indeterminate() { return FieldElement(RatFunc::x()); }

  Backend backend() const {
    return std::holds_alternative<Rational>(v_) ? Backend::Rational : Backend::UniRational;
  }
  bool is_zero() const;
  const Rational& rational() const;  // errors unless Rational backend
  const RatFunc& ratfunc() const;    // errors unless UniRational backend
  RatFunc as_ratfunc() const;        // promotes

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;  // errors on zero divisor
  bool operator==(const FieldElement& o) const;

  FieldElement pow(std::int64_t e) const;  // integer exponent, negative allowed
  std::string to_string() const;

 private:
  std::variant<Rational, RatFunc> v_;
};

}  // namespace e7tensor
