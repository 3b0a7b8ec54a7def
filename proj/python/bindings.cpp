#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "e7tensor/coset72.hpp"
#include "e7tensor/e7char.hpp"
#include "e7tensor/oracle.hpp"
#include "e7tensor/tensor.hpp"

namespace py = pybind11;
using namespace e7tensor;

namespace {

AlgebraId algebra_from_name(const std::string& s) {
  if (s == "e7" || s == "E7") return AlgebraId::E7();
  if (s.size() == 2 && (s[0] == 'a' || s[0] == 'A') && s[1] >= '1' && s[1] <= '7')
    return AlgebraId::A(s[1] - '0');
  throw py::value_error("algebra must be one of a1..a7, e7");
}

DynkinWeight make_weight(const std::string& algebra, const std::vector<int>& labels) {
  return {algebra_from_name(algebra), labels};
}

py::object py_bigint(const Int& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object py_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.get_num().get_str(), q.get_den().get_str());
}

py::object field_value(const FieldElement& v) {
  if (v.backend() == Backend::Rational) return py_fraction(v.rational());
  py::list num, den;
  for (const auto& c : v.ratfunc().num().coefficients()) num.append(py_fraction(c));
  for (const auto& c : v.ratfunc().den().coefficients()) den.append(py_fraction(c));
  return py::make_tuple(num, den);
}

SpecPoint point_for(const DynkinWeight& w, std::uint64_t seed) {
  return SpecPoint::random(seed, w.algebra.is_e7() ? 8 : w.rank() + 1);
}

py::dict decomposition_dict(const Decomposition& d) {
  py::dict out;
  out["lhs"] = py::make_tuple(d.lhs_first.labels, d.lhs_second.labels);
  py::list entries;
  for (const auto& [w, m] : d.entries)
    entries.append(py::make_tuple(w.labels, py_bigint(m)));
  out["entries"] = entries;
  out["sample_points"] = d.sample_points;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact characters and tensor product coefficients for A_n and E7";

  py::register_exception<Error>(m, "E7TensorError");

  m.def("cartan_matrix", [](const std::string& algebra) {
    const auto& c = cartan_matrix(algebra_from_name(algebra));
    std::vector<std::vector<int>> out(c.rank, std::vector<int>(c.rank));
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) out[i][j] = c.at(i, j);
    return out;
  });

  m.def("weyl_vector", [](const std::string& algebra) {
    return weyl_vector(algebra_from_name(algebra)).labels;
  });

  m.def("dim", [](const std::string& algebra, const std::vector<int>& labels) {
    return py_bigint(dim(make_weight(algebra, labels)));
  });

  m.def("orbit_size", [](const std::string& algebra, const std::vector<int>& labels) {
    return orbit_size(make_weight(algebra, labels));
  });

  m.def(
      "simple_reflect",
      [](const std::string& algebra, int i, const std::vector<int>& labels) {
        return simple_reflect(i, make_weight(algebra, labels)).labels;
      },
      py::arg("algebra"), py::arg("i"), py::arg("labels"));

  m.def("e7_to_a7", [](const std::vector<int>& labels) {
    return e7_to_a7(make_weight("e7", labels)).labels;
  });

  m.def("orbit_decompose", [](const std::vector<int>& labels) {
    py::list out;
    for (const auto& sw : orbit_decompose(make_weight("e7", labels)))
      out.append(py::make_tuple(sw.source_index, sw.sign, sw.weight.labels));
    return out;
  });

  m.def("validate", []() {
    const auto report = validate_table();
    py::dict out;
    for (const auto& c : report.checks) out[py::str(c.name)] = c.passed;
    out["ok"] = report.ok();
    return out;
  });

  m.def(
      "char_value",
      [](const std::string& algebra, const std::vector<int>& labels, std::uint64_t seed) {
        const auto w = make_weight(algebra, labels);
        for (std::uint64_t attempt = 0;; ++attempt) {
          const SpecPoint p = point_for(w, seed + attempt);
          try {
            return field_value(w.algebra.is_e7() ? e7_char_eval(w, p) : schur_eval(w, p));
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
          }
        }
      },
      py::arg("algebra"), py::arg("labels"), py::arg("seed") = 0,
      "Character value at a seeded admissible rational point.");

  m.def(
      "char_poly1",
      [](const std::string& algebra, const std::vector<int>& labels) {
        const auto w = make_weight(algebra, labels);
        const SpecPoint p = SpecPoint::one_param();
        return field_value(w.algebra.is_e7() ? e7_char_eval(w, p) : schur_eval(w, p));
      },
      "Character under the one-parameter specialization, as (num, den) coefficient lists.");

  m.def("subdominants", [](const std::string& algebra, const std::vector<int>& labels) {
    py::list out;
    for (const auto& w : subdominants(make_weight(algebra, labels))) out.append(w.labels);
    return out;
  });

  m.def(
      "tensor_decompose",
      [](const std::string& algebra, const std::vector<int>& l1, const std::vector<int>& l2,
         std::uint64_t seed) {
        return decomposition_dict(
            tensor_decompose(make_weight(algebra, l1), make_weight(algebra, l2), seed));
      },
      py::arg("algebra"), py::arg("l1"), py::arg("l2"), py::arg("seed") = 0);

  m.def("tensor_brute", [](const std::string& algebra, const std::vector<int>& l1,
                           const std::vector<int>& l2) {
    return decomposition_dict(
        oracle::tensor_brute(make_weight(algebra, l1), make_weight(algebra, l2)));
  });
}
