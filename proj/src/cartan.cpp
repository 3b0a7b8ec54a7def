#include "e7tensor/cartan.hpp"

#include <numeric>
#include <sstream>

#include "e7tensor/coset72.hpp"

namespace e7tensor {

std::string AlgebraId::name() const {
  return is_e7() ? "E7" : "A" + std::to_string(rank);
}

DynkinWeight DynkinWeight::operator+(const DynkinWeight& o) const {
  if (algebra != o.algebra) raise(ErrorKind::AlgebraMismatch, "weight addition");
  std::vector<int> out(labels);
  for (size_t i = 0; i < out.size(); ++i) out[i] += o.labels[i];
  return {algebra, std::move(out)};
}

DynkinWeight DynkinWeight::operator-(const DynkinWeight& o) const {
  if (algebra != o.algebra) raise(ErrorKind::AlgebraMismatch, "weight subtraction");
  std::vector<int> out(labels);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= o.labels[i];
  return {algebra, std::move(out)};
}

std::vector<std::int64_t> OrthoWeight::canonical() const {
  std::vector<std::int64_t> out(exps);
  std::int64_t mn = out.empty() ? 0 : out[0];
  for (std::int64_t e : out) mn = std::min(mn, e);
  for (std::int64_t& e : out) e -= mn;
  return out;
}

namespace {

CartanMatrix cartan_a(int n) {
  CartanMatrix c;
  c.rank = n;
  for (int i = 0; i < n; ++i) {
    c.entries[i][i] = 2;
    if (i + 1 < n) {
      c.entries[i][i + 1] = -1;
      c.entries[i + 1][i] = -1;
    }
  }
  return c;
}

// Integer adjugate via cofactor expansion; ranks are at most 7.
long long det_ll(const std::vector<std::vector<long long>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  long long d = 0;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    const long long term = m[0][j] * det_ll(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

CartanAdjugate compute_adjugate(const CartanMatrix& c) {
  const int n = c.rank;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = c.at(i, j);
  CartanAdjugate out;
  out.adj.rank = n;
  out.det = static_cast<int>(det_ll(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int col = 0, cc = 0; col < n; ++col) {
          if (col == j) continue;
          minor[rr][cc++] = m[r][col];
        }
        ++rr;
      }
      long long cof = (n == 1) ? 1 : det_ll(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      out.adj.entries[j][i] = static_cast<int>(cof);
    }
  }
  return out;
}

// Adj * v for the algebra's adjugate.
std::vector<std::int64_t> adj_times(const CartanAdjugate& a, const std::vector<int>& v) {
  const int n = a.adj.rank;
  std::vector<std::int64_t> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += static_cast<std::int64_t>(a.adj.at(i, j)) * v[j];
  return out;
}

}  // namespace

const CartanMatrix& cartan_matrix(AlgebraId algebra) {
  if (algebra.is_e7()) return infer_e7_labeling();
  static const std::array<CartanMatrix, kMaxRank> tables = [] {
    std::array<CartanMatrix, kMaxRank> t{};
    for (int n = 1; n <= kMaxRank; ++n) t[n - 1] = cartan_a(n);
    return t;
  }();
  return tables[algebra.rank - 1];
}

const CartanAdjugate& cartan_adjugate(AlgebraId algebra) {
  if (algebra.is_e7()) {
    static const CartanAdjugate e7 = compute_adjugate(cartan_matrix(AlgebraId::E7()));
    return e7;
  }
  static const std::array<CartanAdjugate, kMaxRank> tables = [] {
    std::array<CartanAdjugate, kMaxRank> t{};
    for (int n = 1; n <= kMaxRank; ++n) t[n - 1] = compute_adjugate(cartan_a(n));
    return t;
  }();
  return tables[algebra.rank - 1];
}

DynkinWeight weyl_vector(AlgebraId algebra) {
  return {algebra, std::vector<int>(algebra.rank, 1)};
}

DynkinWeight strict_shift(const DynkinWeight& w) {
  if (!w.dominant()) raise(ErrorKind::NotDominant, "strict_shift requires a dominant weight");
  return w + weyl_vector(w.algebra);
}

OrthoWeight a_to_ortho(const DynkinWeight& w) {
  if (!w.algebra.is_a()) raise(ErrorKind::WrongAlgebra, "a_to_ortho requires A_n");
  const int n = w.rank();
  OrthoWeight out;
  out.exps.assign(n + 1, 0);
  std::int64_t acc = 0;
  for (int j = n - 1; j >= 0; --j) {
    acc += w.labels[j];
    out.exps[j] = acc;
  }
  return out;
}

DynkinWeight e7_to_a7(const DynkinWeight& w) {
  if (!w.algebra.is_e7()) raise(ErrorKind::WrongAlgebra, "e7_to_a7 requires E7");
  // Images of the E7 fundamental weights in A7 labels (one column each).
  static constexpr int kEmb[7][7] = {
      // L1      L2      L3      L4      L5      L6      L7
      {0, 1, 0, 0, 0, 0, 0},  // lambda_1 coefficients
      {1, 0, 0, 0, 0, 0, 0},  // lambda_2
      {0, 1, 2, 2, 1, 0, 1},  // lambda_3
      {0, 0, 0, 0, 0, 1, 0},  // lambda_4
      {0, 0, 0, 0, 1, 0, 0},  // lambda_5
      {0, 0, 0, 1, 0, 0, 0},  // lambda_6
      {0, 0, 0, 0, 0, 0, 1},  // lambda_7
  };
  std::vector<int> out(7, 0);
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 7; ++i) out[j] += kEmb[j][i] * w.labels[i];
  return {AlgebraId::A(7), std::move(out)};
}

Dominance dominance_compare(const DynkinWeight& a, const DynkinWeight& b) {
  if (a.algebra != b.algebra) raise(ErrorKind::AlgebraMismatch, "dominance_compare");
  if (a == b) return Dominance::Equal;
  const auto& adj = cartan_adjugate(a.algebra);
  const auto v = adj_times(adj, (b - a).labels);
  bool all_nonneg = true, all_nonpos = true, integral = true;
  for (std::int64_t x : v) {
    if (x % adj.det != 0) integral = false;
    if (x < 0) all_nonneg = false;
    if (x > 0) all_nonpos = false;
  }
  if (!integral) return Dominance::Incomparable;
  if (all_nonneg) return Dominance::Below;
  if (all_nonpos) return Dominance::Above;
  return Dominance::Incomparable;
}

std::int64_t root_height(const DynkinWeight& v) {
  const auto& adj = cartan_adjugate(v.algebra);
  const auto coords = adj_times(adj, v.labels);
  std::int64_t h = 0;
  for (std::int64_t x : coords) {
    if (x % adj.det != 0)
      raise(ErrorKind::WrongAlgebra, "weight is not in the root lattice");
    h += x / adj.det;
  }
  return h;
}

std::string to_string(const DynkinWeight& w) {
  std::ostringstream os;
  os << w.algebra.name() << "(";
  for (size_t i = 0; i < w.labels.size(); ++i) {
    if (i) os << ",";
    os << w.labels[i];
  }
  os << ")";
  return os.str();
}

}  // namespace e7tensor
