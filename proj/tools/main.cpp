#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "e7tensor/coset72.hpp"
#include "e7tensor/e7char.hpp"
#include "e7tensor/oracle.hpp"
#include "e7tensor/tensor.hpp"

namespace {

using e7tensor::AlgebraId;
using e7tensor::DynkinWeight;
using e7tensor::Error;
using e7tensor::FieldElement;
using e7tensor::Int;
using e7tensor::Rational;
using e7tensor::SpecPoint;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConsistency = 2;

AlgebraId parse_algebra(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(c));
  if (s == "e7") return AlgebraId::E7();
  if (s.size() == 2 && s[0] == 'a' && s[1] >= '1' && s[1] <= '7') return AlgebraId::A(s[1] - '0');
  throw CLI::ValidationError("--algebra", "expected one of a1..a7, e7");
}

DynkinWeight parse_weight(AlgebraId algebra, const std::string& csv) {
  std::vector<int> labels;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      labels.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--w", "bad label '" + tok + "'");
    }
  }
  if (static_cast<int>(labels.size()) != algebra.rank)
    throw CLI::ValidationError("--w", "expected " + std::to_string(algebra.rank) + " labels");
  return {algebra, std::move(labels)};
}

json weight_json(const DynkinWeight& w) { return json(w.labels); }

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

std::string rational_str(const Rational& q) { return q.get_str(); }

json ratfunc_json(const e7tensor::RatFunc& f) {
  json num = json::array(), den = json::array();
  for (const auto& c : f.num().coefficients()) num.push_back(rational_str(c));
  for (const auto& c : f.den().coefficients()) den.push_back(rational_str(c));
  return json{{"den", den}, {"num", num}};
}

struct Options {
  std::string algebra = "e7";
  std::string w, w2;
  std::string backend = "rational";
  std::string output = "text";
  std::string words_file;
  std::uint64_t seed = 0;
  int trials = 3;
  std::int64_t cap = 100000;
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.output == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_dim(const Options& opt) {
  const auto w = parse_weight(parse_algebra(opt.algebra), opt.w);
  const Int d = e7tensor::dim(w);
  emit(opt, json{{"algebra", w.algebra.name()}, {"dim", int_json(d)}, {"weight", weight_json(w)}},
       d.get_str() + "\n");
  return kExitOk;
}

int cmd_char(const Options& opt) {
  const auto w = parse_weight(parse_algebra(opt.algebra), opt.w);
  json j{{"algebra", w.algebra.name()}, {"backend", opt.backend}, {"weight", weight_json(w)}};
  std::ostringstream text;
  if (opt.backend == "poly1") {
    if (w.algebra.is_a() && w.rank() != 7)
      throw CLI::ValidationError("--backend", "poly1 needs an 8-coordinate point (A7 or E7)");
    const SpecPoint p = SpecPoint::one_param();
    const FieldElement value =
        w.algebra.is_e7() ? e7tensor::e7_char_eval(w, p) : e7tensor::schur_eval(w, p);
    j["value"] = ratfunc_json(value.ratfunc());
    text << value.to_string() << "\n";
  } else if (opt.backend == "rational") {
    const int size = w.algebra.is_e7() ? 8 : w.rank() + 1;
    std::uint64_t attempt = 0;
    for (;;) {
      const SpecPoint p = SpecPoint::random(opt.seed + attempt, size);
      try {
        const FieldElement value =
            w.algebra.is_e7() ? e7tensor::e7_char_eval(w, p) : e7tensor::schur_eval(w, p);
        json pt = json::array();
        for (const auto& u : p.values()) pt.push_back(u.to_string());
        j["point"] = pt;
        j["seed"] = opt.seed + attempt;
        j["value"] = value.to_string();
        text << value.to_string() << "\n";
        break;
      } catch (const Error& e) {
        if (e.kind() != e7tensor::ErrorKind::SingularPoint) throw;
        ++attempt;  // singular denominator: advance the seed
      }
    }
  } else {
    throw CLI::ValidationError("--backend", "expected rational or poly1");
  }
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_orbit72(const Options& opt) {
  const auto algebra = parse_algebra(opt.algebra);
  if (!algebra.is_e7()) throw CLI::ValidationError("--algebra", "orbit72 requires e7");
  const auto w = parse_weight(algebra, opt.w);
  const auto dec = e7tensor::orbit_decompose(w);
  json rows = json::array();
  std::ostringstream text;
  for (const auto& sw : dec) {
    rows.push_back(json{{"s", sw.source_index}, {"sign", sw.sign}, {"weight", weight_json(sw.weight)}});
    text << sw.source_index << " " << (sw.sign > 0 ? "+1" : "-1") << " ";
    for (size_t i = 0; i < sw.weight.labels.size(); ++i)
      text << (i ? "," : "") << sw.weight.labels[i];
    text << "\n";
  }
  emit(opt, json{{"rows", rows}, {"weight", weight_json(w)}}, text.str());
  return kExitOk;
}

int cmd_subdom(const Options& opt) {
  const auto w = parse_weight(parse_algebra(opt.algebra), opt.w);
  const auto subs = e7tensor::subdominants(w);
  json rows = json::array();
  std::ostringstream text;
  for (const auto& s : subs) {
    rows.push_back(weight_json(s));
    for (size_t i = 0; i < s.labels.size(); ++i) text << (i ? "," : "") << s.labels[i];
    text << "\n";
  }
  emit(opt, json{{"count", subs.size()}, {"subdominants", rows}, {"top", weight_json(w)}},
       text.str());
  return kExitOk;
}

int cmd_tensor(const Options& opt) {
  const auto algebra = parse_algebra(opt.algebra);
  const auto w = parse_weight(algebra, opt.w);
  if (opt.w2.empty()) throw CLI::ValidationError("--w2", "tensor requires two weights");
  const auto w2 = parse_weight(algebra, opt.w2);
  const auto d = e7tensor::tensor_decompose(w, w2, opt.seed);
  const auto report = e7tensor::verify_decomposition(d, opt.trials, opt.seed + 1);
  if (!report.ok()) {
    std::cerr << "verification failed: "
              << (report.residuals_zero ? "dimension identity" : report.first_failure) << "\n";
    return kExitConsistency;
  }
  json entries = json::array();
  std::ostringstream text;
  text << "R" << e7tensor::to_string(w) << " (x) R" << e7tensor::to_string(w2) << " =\n";
  for (const auto& [weight, mult] : d.entries) {
    entries.push_back(json{{"mult", int_json(mult)}, {"weight", weight_json(weight)}});
    text << "  " << mult.get_str() << " x (";
    for (size_t i = 0; i < weight.labels.size(); ++i) text << (i ? "," : "") << weight.labels[i];
    text << ")\n";
  }
  text << "dim check: " << report.dim_lhs.get_str() << " == " << report.dim_rhs.get_str() << "\n";
  json j{{"dim_check", json{{"lhs", int_json(report.dim_lhs)}, {"rhs", int_json(report.dim_rhs)}}},
         {"entries", entries},
         {"lhs", json::array({weight_json(w), weight_json(w2)})},
         {"provenance", json{{"backend", "rational"},
                             {"sample_points", d.sample_points},
                             {"seed", opt.seed},
                             {"verify_trials", report.trials}}}};
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_validate(const Options& opt) {
  json checks = json::array();
  std::ostringstream text;
  bool all_ok = true;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(json{{"detail", detail}, {"name", name}, {"passed", ok}});
    text << (ok ? "PASS" : "FAIL") << " " << name << (detail.empty() ? "" : "  (" + detail + ")")
         << "\n";
    all_ok = all_ok && ok;
  };

  const std::uint64_t embedded_sum = e7tensor::coset_words_checksum();
  {
    std::ostringstream hex;
    hex << std::hex << embedded_sum;
    add("embedded_words_checksum", embedded_sum == 0x0c4df20959cd55fcull, "fnv1a64=0x" + hex.str());
  }

  const e7tensor::CosetTable* table = &e7tensor::coset_words();
  e7tensor::CosetTable file_table;
  if (!opt.words_file.empty()) {
    std::ifstream in(opt.words_file);
    if (!in) {
      std::cerr << "cannot open " << opt.words_file << "\n";
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    add("words_file_checksum_matches_embedded", e7tensor::fnv1a64(buf.str()) == embedded_sum, "");
    file_table = e7tensor::parse_coset_table(buf.str());
    table = &file_table;
  }

  const auto report = e7tensor::validate_table(*table);
  for (const auto& c : report.checks) add(c.name, c.passed, c.detail);

  try {
    (void)e7tensor::infer_e7_labeling();
    add("node_labeling_unique", true, "");
  } catch (const Error& e) {
    add("node_labeling_unique", false, e.what());
  }

  emit(opt, json{{"checks", checks}, {"ok", all_ok}}, text.str());
  return all_ok ? kExitOk : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characters and tensor product coefficients for A_n and E7"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_weight) {
    sub->add_option("--algebra", opt.algebra, "algebra: a1..a7 or e7")->capture_default_str();
    if (needs_weight) sub->add_option("--w", opt.w, "comma-separated Dynkin labels")->required();
    sub->add_option("--output", opt.output, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "seed for point sampling")->capture_default_str();
  };

  auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of an irreducible representation");
  add_common(dim_cmd, true);
  auto* char_cmd = app.add_subcommand("char", "character value under a specialization");
  add_common(char_cmd, true);
  char_cmd->add_option("--backend", opt.backend, "rational or poly1")->capture_default_str();
  auto* orbit_cmd = app.add_subcommand("orbit72", "72 signed A7 images of a strictly dominant E7 weight");
  add_common(orbit_cmd, true);
  auto* subdom_cmd = app.add_subcommand("subdom", "dominant weights below a dominant weight");
  add_common(subdom_cmd, true);
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product decomposition");
  add_common(tensor_cmd, true);
  tensor_cmd->add_option("--w2", opt.w2, "second weight (comma-separated labels)")->required();
  tensor_cmd->add_option("--trials", opt.trials, "verification trials")->capture_default_str();
  auto* validate_cmd = app.add_subcommand("validate", "validate the coset word table and golden data");
  add_common(validate_cmd, false);
  validate_cmd->add_option("--words-file", opt.words_file, "external word table to validate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(dim_cmd)) return cmd_dim(opt);
    if (app.got_subcommand(char_cmd)) return cmd_char(opt);
    if (app.got_subcommand(orbit_cmd)) return cmd_orbit72(opt);
    if (app.got_subcommand(subdom_cmd)) return cmd_subdom(opt);
    if (app.got_subcommand(tensor_cmd)) return cmd_tensor(opt);
    if (app.got_subcommand(validate_cmd)) return cmd_validate(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.is_consistency_failure() ? kExitConsistency : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
  return kExitUsage;
}
