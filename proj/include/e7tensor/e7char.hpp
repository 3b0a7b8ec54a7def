#pragma once

#include <vector>

#include "e7tensor/alternant.hpp"
#include "e7tensor/cartan.hpp"
#include "e7tensor/field.hpp"

namespace e7tensor {

// Positive roots in weight coordinates plus their simple-root coordinates.
struct PositiveRootSet {
  AlgebraId algebra;
  std::vector<DynkinWeight> roots;
  std::vector<std::vector<int>> root_coords;  // parallel to roots
};

// All positive roots by upward closure from the simple roots. For the
// simply laced algebras here, beta + alpha_i is a root exactly when
// label_i(beta) == -1.
const PositiveRootSet& positive_roots(AlgebraId algebra);

// A(w) for a strictly dominant E7 weight: the signed sum of the 72 A7
// alternants of its coset images.
FieldElement e7_alternant_eval(const DynkinWeight& w, const SpecPoint& p);

// Ch(w) = A(w + rho) / A(rho) for a dominant E7 weight. Errors with
// SingularPoint when A(rho) vanishes at p; the caller resamples.
FieldElement e7_char_eval(const DynkinWeight& w, const SpecPoint& p);

// Weyl dimension formula; exact integer for any dominant weight of A_n or
// E7.
Int dim(const DynkinWeight& w);

}  // namespace e7tensor
