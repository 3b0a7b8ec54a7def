#include "e7tensor/alternant.hpp"

#include <algorithm>
#include <map>

namespace e7tensor {

namespace {

// Fraction-free Bareiss determinant; divisions are exact by construction.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          piv = r;
          break;
        }
      }
      if (piv < 0) return Int(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// det(base_j ^ exps_i) over rational bases, by clearing denominators:
// each column j contributes num_j^{e_i} * den_j^{emax - e_i}, and the
// result is divided by prod_j den_j^{emax}.
Rational power_det(const std::vector<Rational>& base, std::span<const std::int64_t> exps) {
  const int n = static_cast<int>(base.size());
  std::int64_t emax = 0;
  for (auto e : exps) emax = std::max(emax, e);
  std::vector<std::vector<Int>> numpow(n), denpow(n);
  Int divisor(1);
  for (int j = 0; j < n; ++j) {
    const Int& nj = base[j].get_num();
    const Int& dj = base[j].get_den();
    numpow[j].resize(emax + 1);
    denpow[j].resize(emax + 1);
    numpow[j][0] = 1;
    denpow[j][0] = 1;
    for (std::int64_t k = 1; k <= emax; ++k) {
      numpow[j][k] = numpow[j][k - 1] * nj;
      denpow[j][k] = denpow[j][k - 1] * dj;
    }
    divisor *= denpow[j][emax];
  }
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = numpow[j][exps[i]] * denpow[j][emax - exps[i]];
  Rational out(bareiss_det(m), divisor);
  out.canonicalize();
  return out;
}

struct Monomial {
  Rational coef;
  int deg;
};

bool as_monomial(const RatFunc& f, Monomial& out) {
  if (!f.is_monomial()) return false;
  out.coef = f.num().leading() / f.den().leading();
  out.deg = f.num().degree() - f.den().degree();
  return true;
}

RatFunc laurent_to_ratfunc(const std::map<int, Rational>& terms) {
  if (terms.empty()) return RatFunc(Rational(0));
  const int mindeg = terms.begin()->first;
  const int shift = mindeg < 0 ? -mindeg : 0;
  std::vector<Rational> coeffs(terms.rbegin()->first + shift + 1, Rational(0));
  for (const auto& [deg, c] : terms) coeffs[deg + shift] = c;
  return RatFunc(Poly(std::move(coeffs)), Poly::monomial(Rational(1), shift));
}

int permutation_sign(const std::vector<int>& image) {
  int sign = 1;
  for (size_t i = 0; i < image.size(); ++i)
    for (size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) sign = -sign;
  return sign;
}

// Determinant of the bialternant matrix when every coordinate is a Laurent
// monomial c_j x^{g_j}: expand over the columns with g_j != 0 (two for the
// shipped one-parameter point) against rational minors of the constant
// columns.
RatFunc monomial_det(const std::vector<Monomial>& mono, std::span<const std::int64_t> exps) {
  const int n = static_cast<int>(mono.size());
  std::vector<int> var_cols, const_cols;
  for (int j = 0; j < n; ++j)
    (mono[j].deg != 0 ? var_cols : const_cols).push_back(j);
  const int s = static_cast<int>(var_cols.size());
  std::vector<Rational> const_base;
  const_base.reserve(const_cols.size());
  for (int j : const_cols) const_base.push_back(mono[j].coef);

  std::map<int, Rational> laurent;
  // Choose the rows assigned to the variable columns.
  std::vector<int> rows(s);
  std::vector<bool> chosen(n, false);
  std::vector<int> comb(s);
  for (int i = 0; i < s; ++i) comb[i] = i;
  auto next_comb = [&]() {
    int i = s - 1;
    while (i >= 0 && comb[i] == n - s + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int k = i + 1; k < s; ++k) comb[k] = comb[k - 1] + 1;
    return true;
  };
  if (s == 0) {
    Rational d = power_det(const_base, exps);
    if (d != 0) laurent[0] = d;
    return laurent_to_ratfunc(laurent);
  }
  do {
    std::fill(chosen.begin(), chosen.end(), false);
    for (int i = 0; i < s; ++i) chosen[comb[i]] = true;
    std::vector<int> rest;
    for (int r = 0; r < n; ++r)
      if (!chosen[r]) rest.push_back(r);
    std::vector<std::int64_t> minor_exps;
    minor_exps.reserve(rest.size());
    for (int r : rest) minor_exps.push_back(exps[r]);
    const Rational minor = power_det(const_base, minor_exps);
    if (minor == 0) continue;
    // All assignments of the chosen rows to the variable columns.
    std::vector<int> perm(comb);
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> image(n);
      for (size_t k = 0; k < rest.size(); ++k) image[rest[k]] = const_cols[k];
      Rational coef = minor;
      int deg = 0;
      for (int i = 0; i < s; ++i) {
        const int row = perm[i];
        const int col = var_cols[i];
        image[row] = col;
        const auto e = exps[row];
        Rational p(1);
        Rational base = mono[col].coef;
        std::int64_t ee = e;
        // coef^e with integer e >= 0 (exponents are canonicalized).
        for (; ee > 0; --ee) p *= base;
        coef *= p;
        deg += mono[col].deg * static_cast<int>(e);
      }
      coef *= permutation_sign(image);
      auto [it, inserted] = laurent.try_emplace(deg, coef);
      if (!inserted) it->second += coef;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (next_comb());
  for (auto it = laurent.begin(); it != laurent.end();)
    it = it->second == 0 ? laurent.erase(it) : std::next(it);
  return laurent_to_ratfunc(laurent);
}

// Field Gaussian elimination over Q(x); fallback for points that are not
// coordinate-wise monomials (none of the shipped constructors produce
// such points).
RatFunc generic_ratfunc_det(std::vector<std::vector<RatFunc>> m) {
  const int n = static_cast<int>(m.size());
  RatFunc det{Rational(1)};
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r) {
      if (!m[r][k].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return RatFunc(Rational(0));
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    det = det * m[k][k];
    for (int r = k + 1; r < n; ++r) {
      if (m[r][k].is_zero()) continue;
      RatFunc f = m[r][k] / m[k][k];
      for (int c = k; c < n; ++c) m[r][c] = m[r][c] - f * m[k][c];
    }
  }
  if (sign < 0) det = -det;
  return det;
}

}  // namespace

namespace detail {

RationalAlternantContext::RationalAlternantContext(const SpecPoint& p) : size_(p.size()) {
  if (p.backend() != Backend::Rational)
    raise(ErrorKind::WrongAlgebra, "rational context requires a rational-backend point");
  num_.reserve(size_);
  den_.reserve(size_);
  for (int j = 1; j <= size_; ++j) {
    const Rational& q = p.u(j).rational();
    num_.push_back(q.get_num());
    den_.push_back(q.get_den());
  }
  numpow_.assign(size_, {Int(1)});
  denpow_.assign(size_, {Int(1)});
}

void RationalAlternantContext::ensure(std::int64_t max_exp) {
  for (int j = 0; j < size_; ++j) {
    auto& np = numpow_[j];
    auto& dp = denpow_[j];
    while (static_cast<std::int64_t>(np.size()) <= max_exp) {
      np.push_back(np.back() * num_[j]);
      dp.push_back(dp.back() * den_[j]);
    }
  }
}

Rational RationalAlternantContext::alternant(std::span<const std::int64_t> exps) {
  std::int64_t emax = 0;
  for (auto e : exps) emax = std::max(emax, e);
  ensure(emax);
  const int n = size_;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  Int divisor(1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = numpow_[j][exps[i]] * denpow_[j][emax - exps[i]];
    divisor *= denpow_[j][emax];
  }
  Rational out(bareiss_det(m), divisor);
  out.canonicalize();
  return out;
}

}  // namespace detail

FieldElement alternant_eval_exps(std::span<const std::int64_t> exps, const SpecPoint& p) {
  if (static_cast<int>(exps.size()) != p.size())
    raise(ErrorKind::IndexOutOfRange, "exponent count must match point size");
  std::vector<std::int64_t> canon(exps.begin(), exps.end());
  const std::int64_t mn = *std::min_element(canon.begin(), canon.end());
  for (auto& e : canon) e -= mn;  // the dropped monomial factor is (prod u)^mn = 1

  if (p.backend() == Backend::Rational) {
    detail::RationalAlternantContext ctx(p);
    return FieldElement(ctx.alternant(canon));
  }

  std::vector<Monomial> mono(p.size());
  bool all_monomial = true;
  for (int j = 1; j <= p.size(); ++j)
    if (!as_monomial(p.u(j).ratfunc(), mono[j - 1])) all_monomial = false;
  if (all_monomial) return FieldElement(monomial_det(mono, canon));

  std::vector<std::vector<RatFunc>> m(p.size(), std::vector<RatFunc>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      m[i][j] = p.u(j + 1).as_ratfunc().is_zero()
                    ? RatFunc(Rational(0))
                    : FieldElement(p.u(j + 1)).pow(canon[i]).as_ratfunc();
  return FieldElement(generic_ratfunc_det(std::move(m)));
}

FieldElement alternant_eval(const DynkinWeight& w, const SpecPoint& p) {
  if (!w.algebra.is_a()) raise(ErrorKind::WrongAlgebra, "alternant_eval requires A_n");
  if (!w.strictly_dominant()) raise(ErrorKind::NotStrictlyDominant, "alternant_eval");
  return alternant_eval_exps(a_to_ortho(w).canonical(), p);
}

FieldElement schur_eval(const DynkinWeight& w, const SpecPoint& p) {
  if (!w.algebra.is_a()) raise(ErrorKind::WrongAlgebra, "schur_eval requires A_n");
  if (!w.dominant()) raise(ErrorKind::NotDominant, "schur_eval");
  const DynkinWeight rho = weyl_vector(w.algebra);
  return alternant_eval(w + rho, p) / alternant_eval(rho, p);
}

}  // namespace e7tensor
