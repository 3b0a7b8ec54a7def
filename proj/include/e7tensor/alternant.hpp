#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "e7tensor/cartan.hpp"
#include "e7tensor/field.hpp"

namespace e7tensor {

// An assignment of exact field values to the formal exponentials
// u_I = e^{mu_I}, I = 1..n+1, with u_1 * ... * u_{n+1} = 1 and all values
// pairwise distinct. Size 8 serves A7 and, through the coset decomposition,
// E7.
class SpecPoint {
 public:
  // (1, 2, 3, 4, 5, 6, x, 1/(720 x)): the one-parameter specialization used
  // for the displayed character polynomials.
  static SpecPoint one_param();

  // (1, 2, 3, 4, x0, y0, z0, 1/(24 x0 y0 z0)) evaluated numerically.
  static SpecPoint three_param(const Rational& x0, const Rational& y0, const Rational& z0);

  // Deterministic seeded point: size-1 small distinct rationals with the
  // last coordinate fixed by the product-1 relation. Resamples internally
  // until admissible.
  static SpecPoint random(std::uint64_t seed, int size = 8);

  int size() const { return static_cast<int>(u_.size()); }
  Backend backend() const { return backend_; }
  const FieldElement& u(int index_one_based) const;  // I in 1..size
  const std::vector<FieldElement>& values() const { return u_; }

 private:
  SpecPoint(std::vector<FieldElement> u, Backend backend);
  std::vector<FieldElement> u_;
  Backend backend_;
};

// A(w) as a bialternant determinant det(u_j^{e_i}) over the exponent vector
// of w; requires w strictly dominant. The exponent vector is canonicalized
// by subtracting its minimum, which leaves the value unchanged because the
// u_I multiply to 1.
FieldElement alternant_eval(const DynkinWeight& w, const SpecPoint& p);

// Same computation on a raw exponent vector (one exponent per point
// coordinate, pairwise-distinct entries give nonzero values). Used by the
// E7 path where the exponent tables are precomputed.
FieldElement alternant_eval_exps(std::span<const std::int64_t> exps, const SpecPoint& p);

// Ch(w) = A(w + rho) / A(rho); requires w dominant. Equals the Schur
// polynomial of the corresponding partition at u_1..u_{n+1}.
FieldElement schur_eval(const DynkinWeight& w, const SpecPoint& p);

namespace detail {

// Per-point power cache for the rational backend: reduced numerator and
// denominator powers of every coordinate. One instance per thread.
class RationalAlternantContext {
 public:
  explicit RationalAlternantContext(const SpecPoint& p);

  // det(u_j^{e_i}) for nonnegative exponents; grows the power tables on
  // demand.
  Rational alternant(std::span<const std::int64_t> canonical_exps);

 private:
  void ensure(std::int64_t max_exp);
  int size_;
  std::vector<Int> num_, den_;
  std::vector<std::vector<Int>> numpow_, denpow_;
};

}  // namespace detail

}  // namespace e7tensor
