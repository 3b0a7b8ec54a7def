#pragma once

#include <map>

#include "e7tensor/alternant.hpp"
#include "e7tensor/cartan.hpp"
#include "e7tensor/field.hpp"
#include "e7tensor/tensor.hpp"

namespace e7tensor {
// Independent small-rank brute-force machinery (A_1..A_3) used only to
// validate the alternant/coset pipeline. Deliberately shares none of it:
// no determinants, no coset words, no specializations except the final
// monomial evaluation in char_brute.
namespace oracle {

inline constexpr int kMaxOracleRank = 3;
inline constexpr long kMaxOracleDim = 10000;

struct WeightSystem {
  DynkinWeight highest;
  std::map<DynkinWeight, Int> weights;  // weight -> multiplicity (> 0)

  Int total() const;
};

// Full weight system of the irreducible A_n representation (n <= 3,
// dim <= 10000) via the Freudenthal recursion on dominant weights.
WeightSystem freudenthal(const DynkinWeight& w);

// Character value as the plain weighted sum of monomials over the weight
// system; p must have n+1 coordinates.
FieldElement char_brute(const DynkinWeight& w, const SpecPoint& p);

// Tensor decomposition by weight convolution and dominant peeling.
Decomposition tensor_brute(const DynkinWeight& L, const DynkinWeight& Lp);

}  // namespace oracle
}  // namespace e7tensor
