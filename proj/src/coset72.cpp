#include "e7tensor/coset72.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "e7tensor/weyl.hpp"

namespace e7tensor {

namespace detail {
extern const char* const kCosetWordsText;
extern const std::array<std::array<int, 7>, kCosetCount> kLabelingReferenceImages;
}  // namespace detail

std::string_view coset_words_text() { return detail::kCosetWordsText; }

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : text) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t coset_words_checksum() { return fnv1a64(coset_words_text()); }

const std::array<std::array<int, 7>, kCosetCount>& labeling_reference_images() {
  return detail::kLabelingReferenceImages;
}

CosetTable parse_coset_table(std::string_view text) {
  CosetTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int next = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int s = 0;
    std::string sign_tok;
    if (!(ls >> s >> sign_tok)) raise(ErrorKind::ParseError, "bad table line: " + line);
    if (s != next) raise(ErrorKind::ParseError, "table entries out of order at s=" + std::to_string(s));
    int sign = 0;
    if (sign_tok == "+1")
      sign = +1;
    else if (sign_tok == "-1")
      sign = -1;
    else
      raise(ErrorKind::ParseError, "bad sign token: " + sign_tok);
    WeylWord w{AlgebraId::E7(), {}};
    int idx;
    while (ls >> idx) {
      if (idx < 1 || idx > 7) raise(ErrorKind::ParseError, "reflection index out of range");
      w.indices.push_back(idx);
    }
    if (word_sign(w) != sign)
      raise(ErrorKind::ParseError, "sign column contradicts word length at s=" + std::to_string(s));
    if (sign != CosetTable::sign(s))
      raise(ErrorKind::ParseError, "sign split violated at s=" + std::to_string(s));
    table.words[s - 1] = std::move(w);
    ++next;
  }
  if (next != kCosetCount + 1) raise(ErrorKind::ParseError, "expected 72 table entries");
  if (!table.words[0].indices.empty()) raise(ErrorKind::ParseError, "entry 1 must be the identity");
  return table;
}

const CosetTable& coset_words() {
  static const CosetTable table = parse_coset_table(coset_words_text());
  return table;
}

namespace {

// Standard E7 diagram on nodes 0..6: chain 0-2-3-4-5-6 with 1 attached to 3.
constexpr int kStdEdges[6][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};

CartanMatrix standard_e7() {
  CartanMatrix c;
  c.rank = 7;
  for (int i = 0; i < 7; ++i) c.entries[i][i] = 2;
  for (const auto& e : kStdEdges) {
    c.entries[e[0]][e[1]] = -1;
    c.entries[e[1]][e[0]] = -1;
  }
  return c;
}

// Word application with an explicit candidate matrix (the cached
// cartan_matrix(E7) is not available until the search has finished).
std::array<int, 7> apply_word_with(const CartanMatrix& c, const WeylWord& word,
                                   std::array<int, 7> w) {
  for (auto it = word.indices.rbegin(); it != word.indices.rend(); ++it) {
    const int i = *it - 1;
    const int wi = w[i];
    if (wi == 0) continue;
    for (int j = 0; j < 7; ++j) w[j] -= wi * c.at(i, j);
  }
  return w;
}

std::array<int, 7> restrict_to_a7(const std::array<int, 7>& w) {
  DynkinWeight img = e7_to_a7({AlgebraId::E7(), {w.begin(), w.end()}});
  std::array<int, 7> out{};
  std::copy(img.labels.begin(), img.labels.end(), out.begin());
  return out;
}

bool matches_reference(const CartanMatrix& c, const CosetTable& table) {
  const std::array<int, 7> w0 = {1, 1, 2, 2, 1, 1, 1};
  const auto& ref = labeling_reference_images();
  for (int s = 1; s <= kCosetCount; ++s) {
    if (restrict_to_a7(apply_word_with(c, table.word(s), w0)) != ref[s - 1]) return false;
  }
  return true;
}

}  // namespace

const CartanMatrix& infer_e7_labeling() {
  static const CartanMatrix inferred = [] {
    const CartanMatrix std_c = standard_e7();
    const CosetTable& table = coset_words();
    std::array<int, 7> perm = {0, 1, 2, 3, 4, 5, 6};
    std::vector<std::array<int, 7>> matches;
    CartanMatrix found;
    do {
      CartanMatrix cand;
      cand.rank = 7;
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) cand.entries[i][j] = std_c.at(perm[i], perm[j]);
      if (matches_reference(cand, table)) {
        matches.push_back(perm);
        found = cand;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (matches.empty())
      raise(ErrorKind::NoConsistentLabeling,
            "no node ordering of the E7 diagram reproduces the reference images; "
            "the embedded word table is corrupt");
    if (matches.size() > 1) {
      std::ostringstream os;
      os << matches.size() << " node orderings match:";
      for (const auto& p : matches) {
        os << " [";
        for (int i = 0; i < 7; ++i) os << (i ? "," : "") << p[i] + 1;
        os << "]";
      }
      raise(ErrorKind::AmbiguousLabeling, os.str());
    }
    return found;
  }();
  return inferred;
}

std::vector<SignedA7Weight> orbit_decompose(const DynkinWeight& w) {
  return orbit_decompose(w, coset_words());
}

std::vector<SignedA7Weight> orbit_decompose(const DynkinWeight& w, const CosetTable& table) {
  if (!w.algebra.is_e7()) raise(ErrorKind::WrongAlgebra, "orbit_decompose requires E7");
  if (!w.strictly_dominant()) raise(ErrorKind::NotStrictlyDominant, "orbit_decompose");
  std::vector<SignedA7Weight> out;
  out.reserve(kCosetCount);
  for (int s = 1; s <= kCosetCount; ++s)
    out.push_back({e7_to_a7(apply_word(table.word(s), w)), CosetTable::sign(s), s});
  return out;
}

ValidationReport validate_table() { return validate_table(coset_words()); }

ValidationReport validate_table(const CosetTable& table) {
  ValidationReport report;
  auto add = [&](std::string name, bool passed, std::string detail = "") {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  add("identity_first", table.words[0].indices.empty());

  bool parity_ok = true;
  for (int s = 1; s <= kCosetCount; ++s)
    if (word_sign(table.word(s)) != CosetTable::sign(s)) parity_ok = false;
  add("sign_split_36_36", parity_ok);

  const DynkinWeight generic{AlgebraId::E7(), {1, 2, 3, 4, 5, 6, 7}};
  std::vector<SignedA7Weight> dec;
  try {
    dec = orbit_decompose(generic, table);
  } catch (const Error& e) {
    add("generic_decomposition", false, e.what());
    return report;
  }
  std::set<std::vector<int>> distinct;
  bool strict = true;
  for (const auto& sw : dec) {
    distinct.insert(sw.weight.labels);
    if (!sw.weight.strictly_dominant()) strict = false;
  }
  add("images_distinct", distinct.size() == kCosetCount,
      std::to_string(distinct.size()) + " distinct of 72");
  add("images_strictly_dominant", strict);

  const std::int64_t index =
      weyl_group_order(AlgebraId::E7()) / weyl_group_order(AlgebraId::A(7));
  add("index_identity", index == kCosetCount, "|W(E7)|/|W(A7)| = " + std::to_string(index));

  const DynkinWeight pinned{AlgebraId::E7(), {1, 1, 2, 2, 1, 1, 1}};
  const auto& ref = labeling_reference_images();
  bool ref_ok = true;
  try {
    const auto pdec = orbit_decompose(pinned, table);
    for (int s = 0; s < kCosetCount; ++s) {
      if (!std::equal(pdec[s].weight.labels.begin(), pdec[s].weight.labels.end(),
                      ref[s].begin()))
        ref_ok = false;
    }
  } catch (const Error&) {
    ref_ok = false;
  }
  add("reference_images_match", ref_ok);

  return report;
}

}  // namespace e7tensor
