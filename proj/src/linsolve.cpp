#include "e7tensor/linsolve.hpp"

namespace e7tensor {

ExactSolveResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  ExactSolveResult out;
  if (m < n) {
    out.status = SolveStatus::RankDeficient;
    return out;
  }
  int row = 0;
  std::vector<int> pivot_row(n, -1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = row; r < m; ++r) {
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) {
      out.status = SolveStatus::RankDeficient;
      return out;
    }
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (int r = row + 1; r < m; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_row[col] = row;
    ++row;
  }
  // Any leftover equation must have collapsed to 0 = 0.
  for (int r = row; r < m; ++r) {
    if (b[r] != 0) {
      out.status = SolveStatus::Inconsistent;
      return out;
    }
  }
  out.x.assign(n, Rational(0));
  for (int col = n - 1; col >= 0; --col) {
    const int r = pivot_row[col];
    Rational acc = b[r];
    for (int c = col + 1; c < n; ++c) acc -= a[r][c] * out.x[c];
    out.x[col] = acc / a[r][col];
  }
  out.status = SolveStatus::Ok;
  return out;
}

}  // namespace e7tensor
