#include "e7tensor/weyl.hpp"

#include <algorithm>
#include <set>

namespace e7tensor {

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Weyl group order of one connected diagram component, classified by its
// node count and arm structure: A_k, D_k, E6 or E7.
std::int64_t component_order(const CartanMatrix& c, const std::vector<int>& comp) {
  const int k = static_cast<int>(comp.size());
  auto adjacent = [&](int a, int b) { return c.at(a, b) == -1; };
  int branch = -1;
  for (int a : comp) {
    int deg = 0;
    for (int b : comp)
      if (b != a && adjacent(a, b)) ++deg;
    if (deg == 3) branch = a;
  }
  if (branch < 0) return factorial(k + 1);  // A_k
  std::vector<int> arms;
  for (int b : comp) {
    if (b == branch || !adjacent(branch, b)) continue;
    int len = 1, prev = branch, cur = b;
    for (;;) {
      int next = -1;
      for (int z : comp)
        if (z != prev && z != cur && adjacent(cur, z)) next = z;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return (std::int64_t{1} << (k - 1)) * factorial(k);  // D_k
  if (arms == std::vector<int>{1, 2, 2}) return 51840;                                   // E6
  if (arms == std::vector<int>{1, 2, 3}) return 2903040;                                 // E7
  raise(ErrorKind::WrongAlgebra, "unrecognized diagram component");
}

std::int64_t parabolic_order(const CartanMatrix& c, const std::vector<int>& nodes) {
  std::set<int> pending(nodes.begin(), nodes.end());
  std::int64_t order = 1;
  while (!pending.empty()) {
    std::vector<int> comp{*pending.begin()};
    pending.erase(pending.begin());
    for (size_t i = 0; i < comp.size(); ++i) {
      for (auto it = pending.begin(); it != pending.end();) {
        if (c.at(comp[i], *it) == -1) {
          comp.push_back(*it);
          it = pending.erase(it);
        } else {
          ++it;
        }
      }
    }
    order *= component_order(c, comp);
  }
  return order;
}

}  // namespace

DynkinWeight simple_reflect(int i, const DynkinWeight& w) {
  if (i < 1 || i > w.rank()) raise(ErrorKind::IndexOutOfRange, "simple_reflect index");
  const CartanMatrix& c = cartan_matrix(w.algebra);
  const int wi = w.labels[i - 1];
  if (wi == 0) return w;
  std::vector<int> out(w.labels);
  for (int j = 0; j < w.rank(); ++j) out[j] -= wi * c.at(i - 1, j);
  return {w.algebra, std::move(out)};
}

DynkinWeight apply_word(const WeylWord& word, const DynkinWeight& w) {
  if (word.algebra != w.algebra) raise(ErrorKind::AlgebraMismatch, "apply_word");
  DynkinWeight out = w;
  for (auto it = word.indices.rbegin(); it != word.indices.rend(); ++it)
    out = simple_reflect(*it, out);
  return out;
}

int word_sign(const WeylWord& word) { return word.length() % 2 == 0 ? +1 : -1; }

DominantizeResult dominantize(const DynkinWeight& w) {
  DynkinWeight cur = w;
  int sign = +1;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < cur.rank(); ++i) {
      if (cur.labels[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    cur = simple_reflect(neg + 1, cur);
    sign = -sign;
  }
  bool regular = true;
  for (int c : cur.labels)
    if (c == 0) regular = false;
  return {std::move(cur), sign, regular};
}

std::int64_t weyl_group_order(AlgebraId algebra) {
  if (algebra.is_e7()) return 2903040;
  return factorial(algebra.rank + 1);
}

std::int64_t orbit_size(const DynkinWeight& w) {
  if (!w.dominant()) raise(ErrorKind::NotDominant, "orbit_size");
  std::vector<int> zeros;
  for (int i = 0; i < w.rank(); ++i)
    if (w.labels[i] == 0) zeros.push_back(i);
  if (zeros.empty()) return weyl_group_order(w.algebra);
  return weyl_group_order(w.algebra) / parabolic_order(cartan_matrix(w.algebra), zeros);
}

std::vector<DynkinWeight> enumerate_orbit(const DynkinWeight& w, std::int64_t cap) {
  if (!w.dominant()) raise(ErrorKind::NotDominant, "enumerate_orbit");
  if (orbit_size(w) > cap)
    raise(ErrorKind::OrbitTooLarge,
          "orbit has " + std::to_string(orbit_size(w)) + " elements, cap " + std::to_string(cap));
  std::set<std::vector<int>> seen{w.labels};
  std::vector<std::vector<int>> frontier{w.labels};
  const CartanMatrix& c = cartan_matrix(w.algebra);
  const int n = w.rank();
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        std::vector<int> r(v);
        for (int j = 0; j < n; ++j) r[j] -= v[i] * c.at(i, j);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  std::vector<DynkinWeight> out;
  out.reserve(seen.size());
  for (auto& v : seen) out.push_back({w.algebra, v});
  return out;
}

}  // namespace e7tensor
