#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "e7tensor/errors.hpp"

namespace e7tensor {

inline constexpr int kMaxRank = 7;

enum class Family { A, E7 };

// Identifies one of the supported algebras: A_n (1 <= n <= 7) or E7.
struct AlgebraId {
  Family family;
  int rank;

  static AlgebraId A(int n) {
    if (n < 1 || n > kMaxRank) raise(ErrorKind::WrongAlgebra, "A_n requires 1 <= n <= 7");
    return {Family::A, n};
  }
  static AlgebraId E7() { return {Family::E7, 7}; }

  bool is_a() const { return family == Family::A; }
  bool is_e7() const { return family == Family::E7; }
  std::string name() const;

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

// A weight in Dynkin-label (fundamental-weight) coordinates.
struct DynkinWeight {
  AlgebraId algebra;
  std::vector<int> labels;  // length == algebra.rank

  DynkinWeight(AlgebraId a, std::vector<int> l) : algebra(a), labels(std::move(l)) {
    if (static_cast<int>(labels.size()) != algebra.rank)
      raise(ErrorKind::WrongAlgebra, "label count does not match rank");
  }

  int rank() const { return algebra.rank; }
  bool dominant() const {
    for (int c : labels)
      if (c < 0) return false;
    return true;
  }
  bool strictly_dominant() const {
    for (int c : labels)
      if (c < 1) return false;
    return true;
  }
  bool is_zero() const {
    for (int c : labels)
      if (c != 0) return false;
    return true;
  }

  DynkinWeight operator+(const DynkinWeight& o) const;
  DynkinWeight operator-(const DynkinWeight& o) const;

  friend bool operator==(const DynkinWeight&, const DynkinWeight&) = default;
  friend auto operator<=>(const DynkinWeight&, const DynkinWeight&) = default;
};

// Symmetric integer Cartan matrix of rank <= 7.
struct CartanMatrix {
  int rank = 0;
  std::array<std::array<int, kMaxRank>, kMaxRank> entries{};

  int at(int i, int j) const { return entries[i][j]; }
  bool operator==(const CartanMatrix&) const = default;
};

// Exponent vector of a weight in the orthogonal mu-basis, defined up to a
// common additive shift (mu_1 + ... + mu_{n+1} = 0). Entries stay integral
// because Dynkin labels are integers.
struct OrthoWeight {
  std::vector<std::int64_t> exps;  // length n+1 for A_n

  // Shift-insensitive comparison.
  bool operator==(const OrthoWeight& o) const {
    if (exps.size() != o.exps.size()) return false;
    if (exps.empty()) return true;
    const std::int64_t d = exps[0] - o.exps[0];
    for (size_t i = 1; i < exps.size(); ++i)
      if (exps[i] - o.exps[i] != d) return false;
    return true;
  }

  // Representative with minimum exponent 0.
  std::vector<std::int64_t> canonical() const;
};

enum class Dominance { Below, Equal, Above, Incomparable };

// Fixed Cartan matrix of the algebra. For E7 this is the matrix pinned by
// the coset table (see coset72.hpp); the result is cached per process.
const CartanMatrix& cartan_matrix(AlgebraId algebra);

// Adjugate of the Cartan matrix together with its determinant, so that
// inverse-Cartan coordinates reduce to exact integer arithmetic:
// C^{-1} v = (Adj v) / det.
struct CartanAdjugate {
  CartanMatrix adj;
  int det = 1;
};
const CartanAdjugate& cartan_adjugate(AlgebraId algebra);

// Weyl vector rho: the all-ones label vector.
DynkinWeight weyl_vector(AlgebraId algebra);

// w + rho; requires w dominant, result strictly dominant.
DynkinWeight strict_shift(const DynkinWeight& w);

// Exponents of an A_n weight in the mu-basis: exps_j = sum_{i>=j} labels_i,
// exps_{n+1} = 0. Nonincreasing iff dominant, strictly decreasing iff
// strictly dominant.
OrthoWeight a_to_ortho(const DynkinWeight& w);

// Restriction of an E7 weight to the embedded A7, extended linearly to
// arbitrary integer labels.
DynkinWeight e7_to_a7(const DynkinWeight& w);

// Partial order by root-lattice differences: a Below b iff b - a is a
// nonzero nonnegative integer combination of simple roots.
Dominance dominance_compare(const DynkinWeight& a, const DynkinWeight& b);

// Height of v in the root lattice (sum of its simple-root coordinates),
// provided v lies in the root lattice; errors otherwise.
std::int64_t root_height(const DynkinWeight& v);

std::string to_string(const DynkinWeight& w);

}  // namespace e7tensor
