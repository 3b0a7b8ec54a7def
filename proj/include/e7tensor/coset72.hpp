#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "e7tensor/cartan.hpp"
#include "e7tensor/weyl.hpp"

namespace e7tensor {

inline constexpr int kCosetCount = 72;

// The 72 fixed E7 Weyl words that carry a strictly dominant E7 weight to
// the 72 strictly dominant A7 weights of its orbit. Entries 1..36 have even
// length (sign +1), entries 37..72 odd length (sign -1).
struct CosetTable {
  std::array<WeylWord, kCosetCount> words;

  const WeylWord& word(int s) const { return words[s - 1]; }  // s in 1..72
  static int sign(int s) { return s <= 36 ? +1 : -1; }
};

struct SignedA7Weight {
  DynkinWeight weight;  // over A7, strictly dominant for strictly dominant input
  int sign;             // +1 or -1
  int source_index;     // s in 1..72
};

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// The embedded word table (parsed once, then cached).
const CosetTable& coset_words();

// The embedded table as shipped: plain text, one line per word,
// "s sign i1 i2 ... ik". Identical to data/coset_words_e7a7.txt.
std::string_view coset_words_text();

// FNV-1a 64 checksum of coset_words_text(), pinned in the test suite.
std::uint64_t coset_words_checksum();
std::uint64_t fnv1a64(std::string_view text);

// Parses a table in the shipped format. Errors with ParseError on
// malformed lines, bad indices or a sign column that contradicts the
// word-length parity.
CosetTable parse_coset_table(std::string_view text);

// Reference decomposition used to pin the E7 node numbering: the A7 label
// vectors of the 72 images of the strictly dominant E7 weight
// (1,1,2,2,1,1,1), in table order.
const std::array<std::array<int, 7>, kCosetCount>& labeling_reference_images();

// Recovers the E7 Cartan matrix by searching the node orderings of the E7
// diagram for the unique one under which the word table reproduces
// labeling_reference_images(). Errors with NoConsistentLabeling /
// AmbiguousLabeling. Cached; exposed through cartan_matrix(E7).
const CartanMatrix& infer_e7_labeling();

// Applies the 72 words to a strictly dominant E7 weight and restricts each
// image to A7. Output preserves table order; entry s carries sign +1 for
// s <= 36 and -1 otherwise.
std::vector<SignedA7Weight> orbit_decompose(const DynkinWeight& w);
std::vector<SignedA7Weight> orbit_decompose(const DynkinWeight& w, const CosetTable& table);

// Structural validation of a word table against a generic strictly
// dominant weight: 72 distinct strictly dominant A7 images, 36/36 sign
// split, index identity |W(E7)| / |W(A7)| = 72, and agreement with the
// reference images for (1,1,2,2,1,1,1).
ValidationReport validate_table();
ValidationReport validate_table(const CosetTable& table);

}  // namespace e7tensor
