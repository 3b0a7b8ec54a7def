#pragma once

#include <cstdint>
#include <vector>

#include "e7tensor/cartan.hpp"

namespace e7tensor {

// A word in the simple reflections, composed right to left:
// word (i1, i2) acts as sigma_{i1}(sigma_{i2}(w)).
struct WeylWord {
  AlgebraId algebra;
  std::vector<int> indices;  // 1-based, each in 1..rank

  int length() const { return static_cast<int>(indices.size()); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

struct SignedWeight {
  DynkinWeight weight;
  int sign;  // +1 or -1
};

struct DominantizeResult {
  DynkinWeight dominant;
  int sign;      // parity of the reflections applied
  bool regular;  // false iff the dominant representative has a zero label
};

// sigma_i(w) = w - labels_i(w) * alpha_i.
DynkinWeight simple_reflect(int i, const DynkinWeight& w);

// Right-to-left composition of simple reflections.
DynkinWeight apply_word(const WeylWord& word, const DynkinWeight& w);

// (-1)^length; equals the sign of the represented group element.
int word_sign(const WeylWord& word);

// Reflects w into the dominant chamber, tracking the parity of the
// reflections used. Terminates because the Weyl group is finite.
DominantizeResult dominantize(const DynkinWeight& w);

// Order of the full Weyl group.
std::int64_t weyl_group_order(AlgebraId algebra);

// Orbit size |W| / |W_stab(w)| via the parabolic product formula; the
// stabilizer of a dominant weight is generated by the reflections at its
// zero labels.
std::int64_t orbit_size(const DynkinWeight& w);

// All elements of the Weyl orbit of a dominant weight, sorted. Errors with
// OrbitTooLarge when orbit_size(w) exceeds cap.
std::vector<DynkinWeight> enumerate_orbit(const DynkinWeight& w, std::int64_t cap);

}  // namespace e7tensor
