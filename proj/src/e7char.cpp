#include "e7tensor/e7char.hpp"

#include <algorithm>
#include <map>

#include "e7tensor/coset72.hpp"

namespace e7tensor {

namespace {

PositiveRootSet compute_positive_roots(AlgebraId algebra) {
  const CartanMatrix& c = cartan_matrix(algebra);
  const int n = algebra.rank;
  PositiveRootSet out{algebra, {}, {}};
  std::map<std::vector<int>, std::vector<int>> known;  // weight coords -> root coords
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> alpha(n), coord(n, 0);
    for (int j = 0; j < n; ++j) alpha[j] = c.at(i, j);
    coord[i] = 1;
    known.emplace(alpha, coord);
    frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        if (beta[i] != -1) continue;  // beta + alpha_i is a root iff <beta, alpha_i> = -1
        std::vector<int> cand(beta);
        for (int j = 0; j < n; ++j) cand[j] += c.at(i, j);
        if (known.count(cand)) continue;
        std::vector<int> coord = known.at(beta);
        ++coord[i];
        known.emplace(cand, std::move(coord));
        next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }
  for (auto& [w, coord] : known) {
    out.roots.push_back({algebra, w});
    out.root_coords.push_back(coord);
  }
  return out;
}

}  // namespace

const PositiveRootSet& positive_roots(AlgebraId algebra) {
  if (algebra.is_e7()) {
    static const PositiveRootSet e7 = compute_positive_roots(AlgebraId::E7());
    return e7;
  }
  static const std::array<PositiveRootSet, kMaxRank> tables = [] {
    std::array<PositiveRootSet, kMaxRank> t;
    for (int n = 1; n <= kMaxRank; ++n) t[n - 1] = compute_positive_roots(AlgebraId::A(n));
    return t;
  }();
  return tables[algebra.rank - 1];
}

FieldElement e7_alternant_eval(const DynkinWeight& w, const SpecPoint& p) {
  if (!w.algebra.is_e7()) raise(ErrorKind::WrongAlgebra, "e7_alternant_eval requires E7");
  if (!w.strictly_dominant()) raise(ErrorKind::NotStrictlyDominant, "e7_alternant_eval");
  const auto images = orbit_decompose(w);
  if (p.backend() == Backend::Rational) {
    detail::RationalAlternantContext ctx(p);
    Rational acc(0);
    for (const auto& sw : images) {
      const auto exps = a_to_ortho(sw.weight).canonical();
      Rational term = ctx.alternant(exps);
      acc += sw.sign > 0 ? term : Rational(-term);
    }
    return FieldElement(std::move(acc));
  }
  FieldElement acc = FieldElement::integer(0);
  for (const auto& sw : images) {
    FieldElement term = alternant_eval_exps(a_to_ortho(sw.weight).canonical(), p);
    acc = sw.sign > 0 ? acc + term : acc - term;
  }
  return acc;
}

FieldElement e7_char_eval(const DynkinWeight& w, const SpecPoint& p) {
  if (!w.algebra.is_e7()) raise(ErrorKind::WrongAlgebra, "e7_char_eval requires E7");
  if (!w.dominant()) raise(ErrorKind::NotDominant, "e7_char_eval");
  const DynkinWeight rho = weyl_vector(w.algebra);
  FieldElement den = e7_alternant_eval(rho, p);
  if (den.is_zero())
    raise(ErrorKind::SingularPoint, "A(rho) vanishes at this point; resample");
  return e7_alternant_eval(w + rho, p) / den;
}

Int dim(const DynkinWeight& w) {
  if (!w.dominant()) raise(ErrorKind::NotDominant, "dim");
  const PositiveRootSet& pr = positive_roots(w.algebra);
  Int num(1), den(1);
  for (const auto& coord : pr.root_coords) {
    long a = 0, b = 0;
    for (size_t i = 0; i < coord.size(); ++i) {
      a += coord[i] * (w.labels[i] + 1);  // <w + rho, alpha>
      b += coord[i];                      // <rho, alpha>
    }
    num *= a;
    den *= b;
  }
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace e7tensor
