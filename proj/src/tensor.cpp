#include "e7tensor/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "e7tensor/coset72.hpp"
#include "e7tensor/linsolve.hpp"

namespace e7tensor {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed) ^ splitmix64(index * 0x5851f42d4c957f2dull + 1);
}

// Signed exponent tables: an E7 character numerator A(w + rho) expands into
// 72 signed A7 alternants; an A_n one is a single alternant. Tables are
// point-independent and computed once per decomposition.
struct ExpTable {
  std::vector<std::pair<int, std::vector<std::int64_t>>> terms;
};

ExpTable make_table(const DynkinWeight& strictly_dominant) {
  ExpTable t;
  if (strictly_dominant.algebra.is_e7()) {
    for (const auto& sw : orbit_decompose(strictly_dominant))
      t.terms.emplace_back(sw.sign, a_to_ortho(sw.weight).canonical());
  } else {
    t.terms.emplace_back(+1, a_to_ortho(strictly_dominant).canonical());
  }
  return t;
}

Rational eval_table(const ExpTable& t, detail::RationalAlternantContext& ctx) {
  Rational acc(0);
  for (const auto& [sign, exps] : t.terms) {
    Rational v = ctx.alternant(exps);
    if (sign > 0)
      acc += v;
    else
      acc -= v;
  }
  return acc;
}

void parallel_for(int n, const std::function<void(int)>& body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : threads) th.join();
}

FieldElement char_eval(const DynkinWeight& w, const SpecPoint& p) {
  return w.algebra.is_e7() ? e7_char_eval(w, p) : schur_eval(w, p);
}

}  // namespace

std::optional<Int> Decomposition::multiplicity(const DynkinWeight& w) const {
  for (const auto& [weight, mult] : entries)
    if (weight == w) return mult;
  return std::nullopt;
}

std::vector<DynkinWeight> subdominants(const DynkinWeight& top) {
  if (!top.dominant()) raise(ErrorKind::NotDominant, "subdominants");
  const auto& adj = cartan_adjugate(top.algebra);
  const int n = top.rank();
  const int det = adj.det;

  // Residual in adjugate coordinates: v = Adj * (top - theta). theta is
  // dominant, so its simple-root coordinates are nonnegative; v must stay
  // entrywise nonnegative, which bounds the label search box because every
  // entry of the inverse Cartan matrix is positive.
  std::vector<std::int64_t> v0(n, 0);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) v0[r] += static_cast<std::int64_t>(adj.adj.at(r, j)) * top.labels[j];

  std::vector<DynkinWeight> out;
  std::vector<int> labels(n, 0);
  auto rec = [&](auto&& self, int i, std::vector<std::int64_t>& v) -> void {
    if (i == n) {
      bool nonzero = false, integral = true;
      for (std::int64_t x : v) {
        if (x != 0) nonzero = true;
        if (x % det != 0) integral = false;
      }
      if (nonzero && integral) out.push_back({top.algebra, labels});
      return;
    }
    std::vector<std::int64_t> cur(v);
    for (int m = 0;; ++m) {
      labels[i] = m;
      self(self, i + 1, cur);
      bool ok = true;
      for (int r = 0; r < n; ++r) {
        cur[r] -= adj.adj.at(r, i);
        if (cur[r] < 0) ok = false;
      }
      if (!ok) break;
    }
    labels[i] = 0;
  };
  rec(rec, 0, v0);

  std::sort(out.begin(), out.end(), [&](const DynkinWeight& a, const DynkinWeight& b) {
    const auto ha = root_height(top - a), hb = root_height(top - b);
    if (ha != hb) return ha < hb;
    return a.labels < b.labels;
  });
  return out;
}

Decomposition tensor_decompose(const DynkinWeight& L, const DynkinWeight& Lp,
                               std::uint64_t seed) {
  if (L.algebra != Lp.algebra) raise(ErrorKind::AlgebraMismatch, "tensor_decompose");
  if (!L.dominant() || !Lp.dominant()) raise(ErrorKind::NotDominant, "tensor_decompose");

  const DynkinWeight top = L + Lp;
  const DynkinWeight rho = weyl_vector(top.algebra);
  std::vector<DynkinWeight> cands{top};
  for (auto& w : subdominants(top)) cands.push_back(std::move(w));
  const int n = static_cast<int>(cands.size());
  const int point_size = top.algebra.is_e7() ? 8 : top.rank() + 1;

  std::vector<ExpTable> cand_tables(n);
  for (int j = 0; j < n; ++j) cand_tables[j] = make_table(cands[j] + rho);
  const ExpTable l_table = make_table(L + rho);
  const ExpTable lp_table = make_table(Lp + rho);
  const ExpTable rho_table = make_table(rho);

  // One linear-system row per admissible point, with both sides multiplied
  // by A(rho)^2 so no division is needed:
  //   A(L+rho) A(L'+rho) = sum_j t_j A(theta_j+rho) A(rho).
  struct Row {
    bool valid = false;
    std::vector<Rational> coeffs;
    Rational rhs;
  };
  auto compute_row = [&](std::uint64_t point_index) {
    Row row;
    const SpecPoint p = SpecPoint::random(point_seed(seed, point_index), point_size);
    detail::RationalAlternantContext ctx(p);
    const Rational denom = eval_table(rho_table, ctx);
    if (denom == 0) return row;  // singular point; caller advances
    row.coeffs.resize(n);
    for (int j = 0; j < n; ++j) row.coeffs[j] = eval_table(cand_tables[j], ctx) * denom;
    row.rhs = eval_table(l_table, ctx) * eval_table(lp_table, ctx);
    row.valid = true;
    return row;
  };

  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  std::uint64_t next_index = 0;
  auto collect_rows = [&](int count) {
    while (count > 0) {
      const int batch = count;
      std::vector<Row> rows(batch);
      parallel_for(batch, [&](int k) { rows[k] = compute_row(next_index + k); });
      next_index += batch;
      for (auto& row : rows) {
        if (!row.valid) continue;
        matrix.push_back(std::move(row.coeffs));
        rhs.push_back(std::move(row.rhs));
        --count;
      }
    }
  };

  const int initial_rows = n + (n + 3) / 4;  // 25% overdetermined
  collect_rows(initial_rows);
  ExactSolveResult sol;
  for (int attempt = 0;; ++attempt) {
    sol = solve_exact(matrix, rhs);
    if (sol.status == SolveStatus::Ok) break;
    if (sol.status == SolveStatus::Inconsistent)
      raise(ErrorKind::InconsistentSystem,
            "candidate characters cannot reproduce the product; data corrupt");
    if (attempt >= 4)
      raise(ErrorKind::RankDeficient, "evaluation matrix rank-deficient after retries");
    collect_rows(n / 2 + 1);
  }

  // Exactness guards: integral, nonnegative, leading coefficient 1.
  std::vector<Int> mult(n);
  for (int j = 0; j < n; ++j) {
    if (sol.x[j].get_den() != 1)
      raise(ErrorKind::NonIntegerSolution,
            "coefficient of " + to_string(cands[j]) + " is " + sol.x[j].get_str());
    mult[j] = sol.x[j].get_num();
    if (mult[j] < 0)
      raise(ErrorKind::NegativeCoefficient,
            "coefficient of " + to_string(cands[j]) + " is " + mult[j].get_str());
  }
  if (mult[0] != 1)
    raise(ErrorKind::InconsistentSystem, "top weight multiplicity is " + mult[0].get_str());

  // Dimension identity.
  Int dim_lhs = dim(L) * dim(Lp);
  Int dim_rhs(0);
  for (int j = 0; j < n; ++j) dim_rhs += mult[j] * dim(cands[j]);
  if (dim_lhs != dim_rhs)
    raise(ErrorKind::DimensionMismatch,
          dim_lhs.get_str() + " != " + dim_rhs.get_str());

  // Held-out verification at 3 fresh points.
  {
    int verified = 0;
    while (verified < 3) {
      std::vector<Row> rows(3 - verified);
      const int batch = static_cast<int>(rows.size());
      parallel_for(batch, [&](int k) { rows[k] = compute_row(next_index + k); });
      next_index += batch;
      for (const auto& row : rows) {
        if (!row.valid) continue;
        Rational acc(0);
        for (int j = 0; j < n; ++j) acc += Rational(mult[j]) * row.coeffs[j];
        if (acc != row.rhs)
          raise(ErrorKind::InconsistentSystem, "held-out point residual is nonzero");
        ++verified;
      }
    }
  }

  Decomposition d{L, Lp, {}};
  d.sample_points = static_cast<int>(matrix.size());
  for (int j = 0; j < n; ++j)
    if (mult[j] > 0) d.entries.emplace_back(cands[j], mult[j]);
  return d;
}

VerificationReport verify_decomposition(const Decomposition& d, int trials, std::uint64_t seed) {
  VerificationReport report;
  report.dim_lhs = dim(d.lhs_first) * dim(d.lhs_second);
  report.dim_rhs = 0;
  for (const auto& [w, m] : d.entries) report.dim_rhs += m * dim(w);

  const int point_size = d.lhs_first.algebra.is_e7() ? 8 : d.lhs_first.rank() + 1;
  report.residuals_zero = true;
  std::uint64_t index = 0;
  while (report.trials < trials) {
    const SpecPoint p = SpecPoint::random(point_seed(seed ^ 0xabcdef12345ull, index++), point_size);
    FieldElement lhs = FieldElement(Rational(0));
    try {
      lhs = char_eval(d.lhs_first, p) * char_eval(d.lhs_second, p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SingularPoint) continue;
      throw;
    }
    FieldElement rhs_val = FieldElement(Rational(0));
    for (const auto& [w, m] : d.entries)
      rhs_val = rhs_val + FieldElement(Rational(m)) * char_eval(w, p);
    ++report.trials;
    if (!(lhs == rhs_val)) {
      report.residuals_zero = false;
      if (report.first_failure.empty())
        report.first_failure = "nonzero residual at trial " + std::to_string(report.trials);
    }
  }
  return report;
}

}  // namespace e7tensor
