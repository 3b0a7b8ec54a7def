#include <random>
#include <set>

#include "e7tensor/alternant.hpp"

namespace e7tensor {

SpecPoint::SpecPoint(std::vector<FieldElement> u, Backend backend)
    : u_(std::move(u)), backend_(backend) {
  FieldElement prod = FieldElement::integer(1);
  for (const auto& v : u_) prod = prod * v;
  if (!(prod == FieldElement::integer(1)))
    raise(ErrorKind::DegeneratePoint, "coordinates do not multiply to 1");
  for (size_t i = 0; i < u_.size(); ++i)
    for (size_t j = i + 1; j < u_.size(); ++j)
      if (u_[i] == u_[j])
        raise(ErrorKind::DegeneratePoint,
              "coincident coordinates u_" + std::to_string(i + 1) + " = u_" + std::to_string(j + 1));
}

const FieldElement& SpecPoint::u(int index_one_based) const {
  if (index_one_based < 1 || index_one_based > size())
    raise(ErrorKind::IndexOutOfRange, "SpecPoint coordinate");
  return u_[index_one_based - 1];
}

SpecPoint SpecPoint::one_param() {
  std::vector<FieldElement> u;
  for (int k = 1; k <= 6; ++k) u.push_back(FieldElement(RatFunc(Rational(k))));
  u.push_back(FieldElement::indeterminate());
  u.push_back(FieldElement(RatFunc(Poly(Rational(1, 720)), Poly::x())));
  return SpecPoint(std::move(u), Backend::UniRational);
}

SpecPoint SpecPoint::three_param(const Rational& x0, const Rational& y0, const Rational& z0) {
  if (x0 == 0 || y0 == 0 || z0 == 0)
    raise(ErrorKind::DegeneratePoint, "three_param parameters must be nonzero");
  std::vector<FieldElement> u;
  for (int k = 1; k <= 4; ++k) u.push_back(FieldElement(Rational(k)));
  u.push_back(FieldElement(x0));
  u.push_back(FieldElement(y0));
  u.push_back(FieldElement(z0));
  u.push_back(FieldElement(Rational(1) / (Rational(24) * x0 * y0 * z0)));
  return SpecPoint(std::move(u), Backend::Rational);
}

SpecPoint SpecPoint::random(std::uint64_t seed, int size) {
  if (size < 2 || size > 8) raise(ErrorKind::IndexOutOfRange, "SpecPoint size must be 2..8");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> num_dist(-20, 20);
  std::uniform_int_distribution<int> den_dist(1, 6);
  for (;;) {
    std::vector<Rational> vals;
    std::set<Rational> seen;
    bool ok = true;
    Rational prod(1);
    for (int k = 0; k + 1 < size && ok; ++k) {
      int n = 0;
      do {
        n = num_dist(rng);
      } while (n == 0);
      Rational v(n, den_dist(rng));
      v.canonicalize();
      if (!seen.insert(v).second) ok = false;
      vals.push_back(v);
      prod *= v;
    }
    if (!ok) continue;
    Rational last = Rational(1) / prod;
    if (!seen.insert(last).second) continue;
    vals.push_back(last);
    std::vector<FieldElement> u;
    u.reserve(vals.size());
    for (auto& v : vals) u.emplace_back(std::move(v));
    return SpecPoint(std::move(u), Backend::Rational);
  }
}

}  // namespace e7tensor
