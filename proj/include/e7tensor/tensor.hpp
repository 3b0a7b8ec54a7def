#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "e7tensor/cartan.hpp"
#include "e7tensor/e7char.hpp"
#include "e7tensor/field.hpp"

namespace e7tensor {

// Result of a tensor product computation: the multiset of irreducible
// constituents with their multiplicities. Entries are ordered by the height
// of lhs_sum - weight, then lexicographically; the top weight comes first
// with multiplicity 1. Only nonzero multiplicities are stored.
struct Decomposition {
  DynkinWeight lhs_first;
  DynkinWeight lhs_second;
  std::vector<std::pair<DynkinWeight, Int>> entries;
  int sample_points = 0;  // points consumed by the solve (reporting only)

  std::optional<Int> multiplicity(const DynkinWeight& w) const;
};

struct VerificationReport {
  int trials = 0;
  bool residuals_zero = false;
  std::string first_failure;  // empty when residuals_zero
  Int dim_lhs;                // dim(L) * dim(L')
  Int dim_rhs;                // sum of mult * dim
  bool dim_ok() const { return dim_lhs == dim_rhs; }
  bool ok() const { return residuals_zero && dim_ok(); }
};

// All dominant weights strictly below `top`: those theta with
// top - theta a nonzero nonnegative integer combination of simple roots.
// Enumerated over the (finite) box of admissible simple-root coordinates;
// deterministic order (height of top - theta, then lexicographic labels).
std::vector<DynkinWeight> subdominants(const DynkinWeight& top);

// Recovers the coupling coefficients of R(L) (x) R(L') by exact linear
// solves over seeded specialization points. The candidate set is
// {L + L'} union subdominants(L + L'); the solved coefficients must be
// nonnegative integers with coefficient 1 at the top weight, satisfy the
// Weyl dimension identity, and reproduce the product at held-out points.
Decomposition tensor_decompose(const DynkinWeight& L, const DynkinWeight& Lp,
                               std::uint64_t seed = 0);

// Re-evaluates both sides of the character identity at fresh points and
// re-checks the dimension identity.
VerificationReport verify_decomposition(const Decomposition& d, int trials, std::uint64_t seed);

}  // namespace e7tensor
