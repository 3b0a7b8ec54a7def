#include <doctest.h>

#include <random>

#include "e7tensor/e7char.hpp"
#include "e7tensor/oracle.hpp"
#include "golden_displays.hpp"

using namespace e7tensor;

namespace {

const AlgebraId kE7 = AlgebraId::E7();

DynkinWeight e7(std::vector<int> labels) { return {kE7, std::move(labels)}; }

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(positive_roots(AlgebraId::A(2)).roots.size() == 3);
  CHECK(positive_roots(AlgebraId::A(7)).roots.size() == 28);
  CHECK(positive_roots(kE7).roots.size() == 63);  // 2*63 + 7 = dim E7 = 133
}

TEST_CASE("A2 positive roots are the two simple roots and their sum") {
  const auto& pr = positive_roots(AlgebraId::A(2));
  std::vector<std::vector<int>> expect{{2, -1}, {-1, 2}, {1, 1}};
  for (const auto& e : expect) {
    CHECK(std::count_if(pr.roots.begin(), pr.roots.end(),
                        [&](const DynkinWeight& r) { return r.labels == e; }) == 1);
  }
}

TEST_CASE("dimension formula on known representations") {
  CHECK(dim(DynkinWeight{AlgebraId::A(7), {1, 0, 0, 0, 0, 0, 0}}) == 8);
  CHECK(dim(DynkinWeight{AlgebraId::A(7), {0, 0, 0, 0, 0, 0, 0}}) == 1);
  CHECK(dim(DynkinWeight{AlgebraId::A(2), {1, 1}}) == 8);
  CHECK(dim(weyl_vector(AlgebraId::A(1))) == 2);
  CHECK_THROWS_AS(dim(DynkinWeight{AlgebraId::A(2), {-1, 0}}), Error);
}

TEST_CASE("E7 fundamental dimensions under the inferred labeling") {
  const std::vector<long> expect{56, 1539, 27664, 365750, 8645, 133, 912};
  for (int i = 0; i < 7; ++i) {
    std::vector<int> labels(7, 0);
    labels[i] = 1;
    CHECK(dim(e7(labels)) == expect[i]);
  }
  // dim of the adjoint must match |positive roots| * 2 + rank.
  CHECK(dim(e7({0, 0, 0, 0, 0, 1, 0})) == 133);
}

TEST_CASE("e7 alternant vanishes nowhere on sampled points for rho") {
  const DynkinWeight rho = weyl_vector(kE7);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const SpecPoint p = SpecPoint::random(seed);
    CHECK(!e7_alternant_eval(rho, p).is_zero());
  }
}

TEST_CASE("e7 alternant equals the Weyl denominator product at rho") {
  // Independent route: A(rho) = u^rho * prod_{alpha > 0} (1 - u^{-alpha}),
  // evaluated through the shared orthogonal coordinates.
  const DynkinWeight rho = weyl_vector(kE7);
  const auto& pr = positive_roots(kE7);
  for (std::uint64_t seed : {2u, 5u}) {
    const SpecPoint p = SpecPoint::random(seed);
    FieldElement expect = FieldElement::integer(1);
    const auto rho_exps = a_to_ortho(e7_to_a7(rho)).exps;
    for (int j = 0; j < 8; ++j) expect = expect * p.u(j + 1).pow(rho_exps[j]);
    for (const auto& root : pr.roots) {
      const auto alpha = a_to_ortho(e7_to_a7(root)).exps;
      FieldElement mono = FieldElement::integer(1);
      for (int j = 0; j < 8; ++j) mono = mono * p.u(j + 1).pow(-alpha[j]);
      expect = expect * (FieldElement::integer(1) - mono);
    }
    CHECK(e7_alternant_eval(rho, p) == expect);
  }
}

TEST_CASE("e7 character of the zero weight is 1") {
  const SpecPoint p = SpecPoint::random(19);
  CHECK(e7_char_eval(e7({0, 0, 0, 0, 0, 0, 0}), p) == FieldElement(Rational(1)));
}

TEST_CASE("displayed E7 denominator factorization") {
  const SpecPoint p = SpecPoint::one_param();
  const FieldElement a_rho_e7 = e7_alternant_eval(weyl_vector(kE7), p);
  // The displayed product is normalized by the A7 denominator.
  CHECK(a_rho_e7 == golden::e7_denominator_display() * golden::a_rho_a7());
}

TEST_CASE("displayed characters under the one-parameter specialization") {
  const SpecPoint p = SpecPoint::one_param();
  CHECK(e7_char_eval(e7({1, 0, 0, 0, 0, 0, 0}), p) == golden::ch_56());
  CHECK(e7_char_eval(e7({0, 0, 0, 0, 0, 0, 1}), p) == golden::ch_912());
  CHECK(e7_char_eval(e7({0, 0, 1, 0, 0, 0, 0}), p) == golden::ch_27664());
  CHECK(e7_char_eval(e7({0, 0, 0, 1, 0, 0, 0}), p) == golden::ch_365750());
}

TEST_CASE("cross-backend agreement for E7 characters") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> lab(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> labels(7, 0);
    labels[rng() % 7] = 1;
    for (auto& v : labels) v = std::min(1, v + (lab(rng) & (trial % 3 == 0 ? 1 : 0)));
    const DynkinWeight wt = e7(labels);
    const FieldElement sym = e7_char_eval(wt, SpecPoint::one_param());
    for (long num : {7, 13}) {
      const Rational x0(num, 5);
      const SpecPoint numeric = SpecPoint::three_param(Rational(5), Rational(6), x0);
      CHECK(sym.ratfunc().eval(x0) == e7_char_eval(wt, numeric).rational());
    }
  }
}

TEST_CASE("weyl dimension formula agrees with the oracle weight count") {
  for (AlgebraId a : {AlgebraId::A(2), AlgebraId::A(3)}) {
    std::vector<std::vector<int>> tops;
    // all dominant weights with label sum <= 4
    std::vector<int> labels(a.rank, 0);
    const auto rec = [&](auto&& self, int i, int rest) -> void {
      if (i == a.rank) {
        tops.push_back(labels);
        return;
      }
      for (int v = 0; v <= rest; ++v) {
        labels[i] = v;
        self(self, i + 1, rest - v);
      }
      labels[i] = 0;
    };
    rec(rec, 0, 4);
    for (const auto& t : tops) {
      const DynkinWeight wt{a, t};
      CHECK(oracle::freudenthal(wt).total() == dim(wt));
    }
  }
}
