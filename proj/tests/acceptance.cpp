// Acceptance suite: one criterion per check, one PASS/FAIL line each, exit
// status 0 only when every criterion holds. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "acceptance_data.hpp"
#include "e7tensor/coset72.hpp"
#include "e7tensor/e7char.hpp"
#include "e7tensor/oracle.hpp"
#include "e7tensor/tensor.hpp"
#include "golden_displays.hpp"

using namespace e7tensor;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" [") + e.what() + "]";
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::printf("%s criterion %d: %s (%lld ms)%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              static_cast<long long>(ms), note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

DynkinWeight e7(std::vector<int> labels) { return {AlgebraId::E7(), std::move(labels)}; }

const DynkinWeight kL3 = e7({0, 0, 1, 0, 0, 0, 0});
const DynkinWeight kL4 = e7({0, 0, 0, 1, 0, 0, 0});

// Shared by criteria 6 and 7.
Decomposition g_main_result{kL3, kL4, {}};
bool g_main_result_ready = false;

bool check_weyl_orders() {
  const auto e7_order = orbit_size(e7({1, 2, 3, 4, 5, 6, 7}));
  const auto a7_order = orbit_size(weyl_vector(AlgebraId::A(7)));
  return e7_order == 2903040 && a7_order == 40320 && e7_order / a7_order == 72;
}

bool check_coset_table() {
  const auto dec = orbit_decompose(e7({1, 2, 3, 4, 5, 6, 7}));
  std::set<std::vector<int>> distinct;
  int plus = 0, minus = 0;
  for (const auto& sw : dec) {
    if (!sw.weight.strictly_dominant()) return false;
    distinct.insert(sw.weight.labels);
    (sw.sign > 0 ? plus : minus) += 1;
  }
  return distinct.size() == 72 && plus == 36 && minus == 36 && validate_table().ok();
}

bool check_image_list() {
  const auto dec = orbit_decompose(e7({1, 1, 2, 2, 1, 1, 1}));
  if (dec.size() != 72) return false;
  for (int s = 0; s < 72; ++s) {
    if (dec[s].sign != (s < 36 ? +1 : -1)) return false;
    if (!std::equal(dec[s].weight.labels.begin(), dec[s].weight.labels.end(),
                    acceptance_data::kExpectedImages[s].begin()))
      return false;
  }
  return true;
}

bool check_denominators() {
  const SpecPoint p = SpecPoint::one_param();
  const FieldElement a7_denom = alternant_eval(weyl_vector(AlgebraId::A(7)), p);
  if (!(a7_denom == golden::a_rho_a7())) return false;
  // The displayed E7 factorization is normalized by the A7 denominator:
  // what the source prints as A(rho_E7) equals A(rho_E7) / A(rho_A7).
  const FieldElement e7_denom = e7_alternant_eval(weyl_vector(AlgebraId::E7()), p);
  return e7_denom == golden::e7_denominator_display() * a7_denom;
}

bool check_character_goldens() {
  const SpecPoint p = SpecPoint::one_param();
  if (!(e7_char_eval(e7({1, 0, 0, 0, 0, 0, 0}), p) == golden::ch_56())) return false;
  return e7_char_eval(kL3 + kL4, p) == golden::ch_top_pair();
}

bool check_main_product() {
  g_main_result = tensor_decompose(kL3, kL4, 0);
  g_main_result_ready = true;
  // Expect exactly the frozen 40 constituents: anything else must have
  // coefficient 0, i.e. not appear among the positive entries.
  if (g_main_result.entries.size() != acceptance_data::kExpectedProduct.size()) return false;
  for (const auto& [labels, mult] : acceptance_data::kExpectedProduct) {
    const auto got = g_main_result.multiplicity(e7({labels.begin(), labels.end()}));
    if (!got.has_value() || *got != mult) return false;
  }
  return true;
}

bool check_dimension_identity() {
  if (!g_main_result_ready) return false;
  Int rhs(0);
  for (const auto& [w, m] : g_main_result.entries) rhs += m * dim(w);
  return dim(kL3) * dim(kL4) == rhs;
}

bool check_oracle_equivalence() {
  // Exhaustive dominant pairs with label sums <= 3 on A2 and A3.
  for (int rank : {2, 3}) {
    const AlgebraId a = AlgebraId::A(rank);
    std::vector<std::vector<int>> weights;
    std::vector<int> labels(rank, 0);
    const auto rec = [&](auto&& self, int i, int rest) -> void {
      if (i == rank) {
        weights.push_back(labels);
        return;
      }
      for (int v = 0; v <= rest; ++v) {
        labels[i] = v;
        self(self, i + 1, rest - v);
      }
      labels[i] = 0;
    };
    rec(rec, 0, 3);
    for (size_t i = 0; i < weights.size(); ++i) {
      for (size_t j = i; j < weights.size(); ++j) {
        const DynkinWeight l1{a, weights[i]}, l2{a, weights[j]};
        const auto fast = tensor_decompose(l1, l2, 29);
        const auto brute = oracle::tensor_brute(l1, l2);
        if (fast.entries != brute.entries) return false;
      }
    }
  }
  // schur_eval against the monomial oracle on 50 random (weight, point) pairs.
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> lab(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const int rank = 2 + (trial % 2);
    std::vector<int> labels(rank);
    for (auto& v : labels) v = lab(rng);
    const DynkinWeight w{AlgebraId::A(rank), labels};
    const SpecPoint p = SpecPoint::random(9000 + trial, rank + 1);
    if (!(schur_eval(w, p) == oracle::char_brute(w, p))) return false;
  }
  return true;
}

bool check_property_suite() {
  std::mt19937 rng(101);

  // Reflection involution, 100+ cases across algebras.
  for (int trial = 0; trial < 120; ++trial) {
    const AlgebraId a = trial % 2 == 0 ? AlgebraId::E7() : AlgebraId::A(1 + trial % 7);
    std::uniform_int_distribution<int> lab(-4, 4);
    std::vector<int> labels(a.rank);
    for (auto& v : labels) v = lab(rng);
    const DynkinWeight w{a, labels};
    const int i = 1 + static_cast<int>(rng() % a.rank);
    if (!(simple_reflect(i, simple_reflect(i, w)) == w)) return false;
  }

  // Dominantize round-trip on random words from strictly dominant weights.
  for (int trial = 0; trial < 120; ++trial) {
    const AlgebraId a = trial % 2 == 0 ? AlgebraId::E7() : AlgebraId::A(2 + trial % 6);
    std::uniform_int_distribution<int> lab(1, 3);
    std::vector<int> labels(a.rank);
    for (auto& v : labels) v = lab(rng);
    const DynkinWeight w{a, labels};
    WeylWord word{a, {}};
    const int len = static_cast<int>(rng() % 14);
    for (int k = 0; k < len; ++k) word.indices.push_back(1 + static_cast<int>(rng() % a.rank));
    const auto result = dominantize(apply_word(word, w));
    if (!(result.dominant == w) || !result.regular) return false;
    if (result.sign != word_sign(word)) return false;
  }

  // Alternant antisymmetry under random transpositions.
  for (int trial = 0; trial < 110; ++trial) {
    std::uniform_int_distribution<int> lab(1, 3);
    std::vector<int> labels(7);
    for (auto& v : labels) v = lab(rng);
    auto exps = a_to_ortho(DynkinWeight{AlgebraId::A(7), labels}).canonical();
    const SpecPoint p = SpecPoint::random(40000 + trial);
    const FieldElement base = alternant_eval_exps(exps, p);
    const int i = static_cast<int>(rng() % 8);
    int j = static_cast<int>(rng() % 8);
    while (j == i) j = static_cast<int>(rng() % 8);
    std::swap(exps[i], exps[j]);
    if (!(alternant_eval_exps(exps, p) == -base)) return false;
  }

  // Seed independence and commutativity of decompositions.
  int cases = 0;
  for (int trial = 0; cases < 100; ++trial) {
    const int rank = 2 + (trial % 2);
    const AlgebraId a = AlgebraId::A(rank);
    std::uniform_int_distribution<int> lab(0, 2);
    std::vector<int> l1(rank), l2(rank);
    for (auto& v : l1) v = lab(rng);
    for (auto& v : l2) v = lab(rng);
    const DynkinWeight w1{a, l1}, w2{a, l2};
    const auto d1 = tensor_decompose(w1, w2, 1 + trial);
    const auto d2 = tensor_decompose(w1, w2, 7777 + trial);
    const auto d3 = tensor_decompose(w2, w1, 1 + trial);
    if (d1.entries != d2.entries || d1.entries != d3.entries) return false;
    cases += 2;  // one seed-independence case, one commutativity case
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "Weyl group orders |W(E7)| = 2903040, |W(A7)| = 40320, index 72",
            check_weyl_orders);
  criterion(2, "72 coset words give distinct strictly dominant images, signs split 36/36",
            check_coset_table);
  criterion(3, "positional image list for (1,1,2,2,1,1,1) matches the frozen 72 rows",
            check_image_list);
  criterion(4, "denominator alternants match their displayed factorizations",
            check_denominators);
  criterion(5, "displayed characters for the 56 and the top product constituent match",
            check_character_goldens);
  criterion(6, "27664 (x) 365750 decomposes with multiplicities 1,2,3,4,5 over 40 constituents",
            check_main_product);
  criterion(7, "dimension identity for the main product", check_dimension_identity);
  criterion(8, "solver agrees with the brute-force oracle (exhaustive small pairs + 50 samples)",
            check_oracle_equivalence);
  criterion(9, "property suite: involution, dominantize, antisymmetry, seeds, commutativity",
            check_property_suite);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
