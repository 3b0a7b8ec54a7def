#include "e7tensor/oracle.hpp"

#include <algorithm>

#include "e7tensor/e7char.hpp"
#include "e7tensor/weyl.hpp"

namespace e7tensor {
namespace oracle {

namespace {

void check_oracle_algebra(const DynkinWeight& w) {
  if (!w.algebra.is_a() || w.algebra.rank > kMaxOracleRank)
    raise(ErrorKind::WrongAlgebra, "oracle handles A_1..A_3 only");
}

// Inner product scaled by (n+1), on mu-coordinates projected to the
// trace-zero hyperplane: sip(a, b) = (n+1) sum a_i b_i - (sum a)(sum b).
// Roots then have squared length 2(n+1).
std::int64_t sip(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const std::int64_t n1 = static_cast<std::int64_t>(a.size());
  std::int64_t dot = 0, sa = 0, sb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    sa += a[i];
    sb += b[i];
  }
  return n1 * dot - sa * sb;
}

std::vector<std::int64_t> ortho(const DynkinWeight& w) { return a_to_ortho(w).exps; }

}  // namespace

Int WeightSystem::total() const {
  Int t(0);
  for (const auto& [w, m] : weights) t += m;
  return t;
}

WeightSystem freudenthal(const DynkinWeight& w) {
  check_oracle_algebra(w);
  if (!w.dominant()) raise(ErrorKind::NotDominant, "freudenthal");
  if (dim(w) > kMaxOracleDim)
    raise(ErrorKind::TooLarge, "dim " + dim(w).get_str() + " exceeds the oracle cap");

  const DynkinWeight rho = weyl_vector(w.algebra);
  const auto& roots = positive_roots(w.algebra);

  // Dominant weights of the system in decreasing order (increasing root
  // height below w); multiplicities by the Freudenthal recursion.
  std::vector<DynkinWeight> dominants{w};
  for (auto& s : subdominants(w)) dominants.push_back(std::move(s));
  std::map<DynkinWeight, Int> mult;
  mult.emplace(w, 1);

  const auto top_ortho = ortho(w + rho);
  const std::int64_t top_norm = sip(top_ortho, top_ortho);
  for (size_t di = 1; di < dominants.size(); ++di) {
    const DynkinWeight& mu = dominants[di];
    Int num(0);
    for (size_t r = 0; r < roots.roots.size(); ++r) {
      const auto alpha = ortho(roots.roots[r]);
      DynkinWeight shifted = mu;
      for (int k = 1;; ++k) {
        shifted = shifted + roots.roots[r];
        const auto it = mult.find(dominantize(shifted).dominant);
        if (it == mult.end()) break;  // weight strings are unbroken
        num += it->second * sip(ortho(shifted), alpha);
      }
    }
    const auto mu_ortho = ortho(mu + rho);
    const std::int64_t den = top_norm - sip(mu_ortho, mu_ortho);
    Int m = 2 * num;
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), Int(den).get_mpz_t());
    if (m > 0) mult.emplace(mu, std::move(m));
  }

  WeightSystem ws{w, {}};
  for (const auto& [dom, m] : mult) {
    for (auto& orbit_elem : enumerate_orbit(dom, kMaxOracleDim)) ws.weights.emplace(orbit_elem, m);
  }
  return ws;
}

FieldElement char_brute(const DynkinWeight& w, const SpecPoint& p) {
  check_oracle_algebra(w);
  if (p.size() != w.rank() + 1)
    raise(ErrorKind::IndexOutOfRange, "point size must be rank + 1");
  const WeightSystem ws = freudenthal(w);
  FieldElement acc = FieldElement(Rational(0));
  for (const auto& [weight, m] : ws.weights) {
    FieldElement term = FieldElement(Rational(m));
    const auto exps = a_to_ortho(weight).exps;
    for (int j = 0; j < p.size(); ++j) term = term * p.u(j + 1).pow(exps[j]);
    acc = acc + term;
  }
  return acc;
}

Decomposition tensor_brute(const DynkinWeight& L, const DynkinWeight& Lp) {
  if (L.algebra != Lp.algebra) raise(ErrorKind::AlgebraMismatch, "tensor_brute");
  const WeightSystem a = freudenthal(L);
  const WeightSystem b = freudenthal(Lp);

  std::map<DynkinWeight, Int> remainder;
  for (const auto& [w1, m1] : a.weights)
    for (const auto& [w2, m2] : b.weights) {
      auto [it, inserted] = remainder.try_emplace(w1 + w2, m1 * m2);
      if (!inserted) it->second += m1 * m2;
    }

  const DynkinWeight top = L + Lp;
  std::map<DynkinWeight, WeightSystem> systems;
  Decomposition d{L, Lp, {}};
  while (!remainder.empty()) {
    // Highest remaining dominant weight: minimal root height below the top,
    // lexicographically smallest on ties.
    const DynkinWeight* best = nullptr;
    std::int64_t best_h = 0;
    for (const auto& [w, m] : remainder) {
      if (m == 0 || !w.dominant()) continue;
      const std::int64_t h = root_height(top - w);
      if (!best || h < best_h || (h == best_h && w.labels < best->labels)) {
        best = &w;
        best_h = h;
      }
    }
    if (!best) raise(ErrorKind::NegativeRemainder, "no dominant weight left in nonzero remainder");
    const DynkinWeight peel = *best;
    const Int count = remainder.at(peel);
    if (count < 0) raise(ErrorKind::NegativeRemainder, to_string(peel));
    auto sys = systems.find(peel);
    if (sys == systems.end()) sys = systems.emplace(peel, freudenthal(peel)).first;
    for (const auto& [w, m] : sys->second.weights) {
      auto it = remainder.find(w);
      if (it == remainder.end()) raise(ErrorKind::NegativeRemainder, to_string(w));
      it->second -= count * m;
      if (it->second < 0) raise(ErrorKind::NegativeRemainder, to_string(w));
      if (it->second == 0) remainder.erase(it);
    }
    d.entries.emplace_back(peel, count);
  }
  return d;
}

}  // namespace oracle
}  // namespace e7tensor
