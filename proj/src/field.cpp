#include "e7tensor/field.hpp"

#include <algorithm>
#include <sstream>

namespace e7tensor {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(Rational c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(Rational(1), 1); }

Poly Poly::monomial(Rational c, int deg) {
  Poly p;
  if (c != 0) {
    p.coeffs_.assign(deg + 1, Rational(0));
    p.coeffs_[deg] = std::move(c);
  }
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k > degree()) return zero;
  return coeffs_[k];
}

const Rational& Poly::leading() const {
  if (is_zero()) raise(ErrorKind::ParseError, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool Poly::is_monomial() const {
  if (is_zero()) return false;
  for (int k = 0; k < degree(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c = -c;
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly();
  std::vector<Rational> out(coeffs_);
  for (auto& v : out) v *= c;
  return Poly(std::move(out));
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) raise(ErrorKind::ParseError, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs_);
  const int db = b.degree();
  const Rational& lead = b.coeffs_.back();
  std::vector<Rational> quot;
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= 0 && rem[dr] == 0) --dr;
  if (dr >= db) quot.assign(dr - db + 1, Rational(0));
  while (dr >= db) {
    Rational f = rem[dr] / lead;
    quot[dr - db] = f;
    for (int k = 0; k <= db; ++k) rem[dr - db + k] -= f * b.coeffs_[k];
    rem[dr] = 0;
    while (dr >= 0 && rem[dr] == 0) --dr;
  }
  q = Poly(std::move(quot));
  r = Poly(std::move(rem));
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(a, b, q, r);
  if (!r.is_zero()) raise(ErrorKind::ParseError, "inexact polynomial division");
  return q;
}

namespace {

// Integer-primitive form of a rational polynomial: coefficients scaled to
// coprime integers with positive leading coefficient.
std::vector<Int> primitive_int(const Poly& p) {
  Int lcm_den(1);
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    Int d = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    lcm_den = lcm_den / g * d;
  }
  std::vector<Int> out;
  out.reserve(p.coefficients().size());
  Int content(0);
  for (const auto& c : p.coefficients()) {
    Rational scaled = c * Rational(lcm_den);
    Int z = scaled.get_num();  // denominator is 1 after scaling
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (content != 0)
    for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  if (!out.empty() && out.back() < 0)
    for (auto& z : out) z = -z;
  return out;
}

void int_trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<Int>& v) {
  Int content(0);
  for (const auto& z : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content > 1)
    for (auto& z : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  if (!v.empty() && v.back() < 0)
    for (auto& z : v) z = -z;
}

// Pseudo-remainder of a by b over Z[x], then reduced to primitive form.
std::vector<Int> primitive_prem(std::vector<Int> a, const std::vector<Int>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Int& lead = b.back();
  int da = static_cast<int>(a.size()) - 1;
  while (da >= db) {
    Int f = a[da];
    for (auto& c : a) c *= lead;
    for (int k = 0; k <= db; ++k) a[da - db + k] -= f * b[k];
    int_trim(a);
    make_primitive(a);
    da = static_cast<int>(a.size()) - 1;
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Int> r0 = primitive_int(a);
  std::vector<Int> r1 = primitive_int(b);
  if (r0.size() < r1.size()) std::swap(r0, r1);
  while (!r1.empty()) {
    std::vector<Int> r2 = primitive_prem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  std::vector<Rational> out;
  out.reserve(r0.size());
  for (const auto& z : r0) out.emplace_back(z);
  return Poly(std::move(out)).monic();
}

Rational Poly::eval(const Rational& v) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return *this * (Rational(1) / coeffs_.back());
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[k].get_str();
    if (k > 0) os << "*x^" << k;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) raise(ErrorKind::ParseError, "zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    // Exact-division fast path; covers alternant ratios, which divide
    // exactly in the Laurent ring.
    Poly q, r;
    Poly::divrem(num_, den_, q, r);
    if (r.is_zero() && den_.degree() >= 0) {
      num_ = std::move(q);
      den_ = Poly(Rational(1));
    } else {
      Poly g = Poly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
      }
    }
  }
  // Monic denominator.
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out(*this);
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) raise(ErrorKind::ParseError, "division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rational RatFunc::eval(const Rational& v) const {
  Rational d = den_.eval(v);
  if (d == 0) raise(ErrorKind::SingularPoint, "rational function pole at evaluation point");
  return num_.eval(v) / d;
}

std::string RatFunc::to_string() const {
  if (den_ == Poly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// FieldElement

bool FieldElement::is_zero() const {
  if (backend() == Backend::Rational) return std::get<Rational>(v_) == 0;
  return std::get<RatFunc>(v_).is_zero();
}

const Rational& FieldElement::rational() const {
  if (backend() != Backend::Rational)
    raise(ErrorKind::WrongAlgebra, "field element is not a plain rational");
  return std::get<Rational>(v_);
}

const RatFunc& FieldElement::ratfunc() const {
  if (backend() != Backend::UniRational)
    raise(ErrorKind::WrongAlgebra, "field element is not a rational function");
  return std::get<RatFunc>(v_);
}

RatFunc FieldElement::as_ratfunc() const {
  if (backend() == Backend::UniRational) return std::get<RatFunc>(v_);
  return RatFunc(std::get<Rational>(v_));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (backend() == Backend::Rational && o.backend() == Backend::Rational)
    return FieldElement(rational() + o.rational());
  return FieldElement(as_ratfunc() + o.as_ratfunc());
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (backend() == Backend::Rational && o.backend() == Backend::Rational)
    return FieldElement(rational() - o.rational());
  return FieldElement(as_ratfunc() - o.as_ratfunc());
}

FieldElement FieldElement::operator-() const {
  if (backend() == Backend::Rational) return FieldElement(Rational(-rational()));
  return FieldElement(-ratfunc());
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (backend() == Backend::Rational && o.backend() == Backend::Rational)
    return FieldElement(rational() * o.rational());
  return FieldElement(as_ratfunc() * o.as_ratfunc());
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) raise(ErrorKind::SingularPoint, "division by zero field element");
  if (backend() == Backend::Rational && o.backend() == Backend::Rational)
    return FieldElement(rational() / o.rational());
  return FieldElement(as_ratfunc() / o.as_ratfunc());
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (backend() == Backend::Rational && o.backend() == Backend::Rational)
    return rational() == o.rational();
  return as_ratfunc() == o.as_ratfunc();
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return FieldElement(Rational(1)) / pow(-e);
  FieldElement base = *this;
  FieldElement acc = FieldElement(Rational(1));
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string FieldElement::to_string() const {
  if (backend() == Backend::Rational) return rational().get_str();
  return ratfunc().to_string();
}

}  // namespace e7tensor
