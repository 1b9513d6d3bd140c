// Python bindings: the main operations with rationals and polynomials
// crossing the boundary as exact strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "varch/amsystem.hpp"
#include "varch/checks.hpp"
#include "varch/json_io.hpp"
#include "varch/varchenko.hpp"

namespace py = pybind11;
using namespace varch;

namespace {

QAssignment q_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<Rational, Rational>> values;
  values.reserve(pairs.size());
  for (const auto& [plus, minus] : pairs) {
    values.emplace_back(parse_rational(plus), parse_rational(minus));
  }
  return QAssignment(values);
}

Apartment apartment_from_map(const std::map<int, std::string>& constraints) {
  Apartment k;
  for (const auto& [h, sign] : constraints) {
    if (sign != "+" && sign != "-") {
      throw InputError("apartment sign for hyperplane " + std::to_string(h) +
                       " must be \"+\" or \"-\"");
    }
    k.constraints[h] = sign[0];
  }
  return k;
}

Flat flat_from_list(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int h : indices) {
    if (h < 1) throw InputError("hyperplane indices are 1-based");
  }
  return Flat{std::move(indices)};
}

py::dict matrix_dict(const VarchenkoMatrix& vm) {
  py::list chambers;
  for (const SignVector& c : vm.chambers) chambers.append(c);
  py::list matrix;
  for (int i = 0; i < vm.entries.size(); ++i) {
    py::list row;
    for (int j = 0; j < vm.entries.size(); ++j) row.append(vm.entries.at(i, j).str());
    matrix.append(row);
  }
  py::dict out;
  out["chambers"] = chambers;
  out["matrix"] = matrix;
  out["det"] = det_bareiss(vm.entries).str();
  return out;
}

py::list closed_form_list(const std::vector<WeightedFace>& wf) {
  py::list out;
  for (const WeightedFace& w : wf) {
    out.append(py::make_tuple(w.face, w.weight.str(), w.multiplicity));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Varchenko matrices and Aguiar-Mahajan systems of sign-vector arrangements";

  const py::object error = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", error.ptr());

  py::class_<Arrangement>(m, "Arrangement")
      .def_static("from_file", &load_arrangement, py::arg("path"))
      .def_static(
          "from_json",
          [](const std::string& text) {
            Json doc;
            try {
              doc = Json::parse(text);
            } catch (const Json::exception& e) {
              throw InputError(e.what());
            }
            return arrangement_from_json(doc);
          },
          py::arg("text"))
      .def_static(
          "from_covectors",
          [](int m_, const std::string& mode, const std::vector<SignVector>& faces) {
            if (mode != "full" && mode != "chambers_only") {
              throw InputError("mode must be \"full\" or \"chambers_only\"");
            }
            return Arrangement::from_covectors(
                m_, mode == "full" ? Mode::full : Mode::chambers_only, faces);
          },
          py::arg("m"), py::arg("mode"), py::arg("faces"))
      .def_property_readonly("m", &Arrangement::m)
      .def_property_readonly("mode",
                             [](const Arrangement& a) {
                               return a.mode() == Mode::full ? "full" : "chambers_only";
                             })
      .def_property_readonly("faces",
                             [](const Arrangement& a) {
                               std::vector<SignVector> out;
                               for (const Face& f : a.faces()) out.push_back(f.sign);
                               return out;
                             })
      .def_property_readonly("chambers", &Arrangement::chambers)
      .def("validate",
           [](const Arrangement& a) {
             const ValidationReport report = a.validate();
             py::list issues;
             for (const ValidationIssue& i : report.issues) {
               issues.append(py::make_tuple(i.check, i.witness));
             }
             return issues;
           })
      .def("__repr__", [](const Arrangement& a) {
        return "Arrangement(m=" + std::to_string(a.m()) + ", faces=" +
               std::to_string(a.faces().size()) + ", mode=" +
               (a.mode() == Mode::full ? "full" : "chambers_only") + ")";
      });

  m.def(
      "distance",
      [](const Arrangement& a, const SignVector& c, const SignVector& d) {
        return distance(a, c, d).str();
      },
      py::arg("arrangement"), py::arg("c"), py::arg("d"));
  m.def(
      "distance_extended",
      [](const Arrangement& a, const SignVector& f, const SignVector& g) {
        return distance_extended(a, f, g).str();
      },
      py::arg("arrangement"), py::arg("f"), py::arg("g"));

  m.def(
      "varchenko_matrix",
      [](const Arrangement& a, const std::map<int, std::string>& apartment) {
        return matrix_dict(varchenko_matrix(a, apartment_from_map(apartment)));
      },
      py::arg("arrangement"), py::arg("apartment") = std::map<int, std::string>{});
  m.def(
      "restriction_matrix",
      [](const Arrangement& a, const std::vector<int>& flat) {
        return matrix_dict(varchenko_matrix_restriction(a, flat_from_list(flat)));
      },
      py::arg("arrangement"), py::arg("flat"));
  m.def(
      "closed_form",
      [](const Arrangement& a, const std::map<int, std::string>& apartment) {
        return closed_form_list(weighted_faces(a, apartment_from_map(apartment)));
      },
      py::arg("arrangement"), py::arg("apartment") = std::map<int, std::string>{});
  m.def(
      "closed_form_det",
      [](const Arrangement& a, const std::map<int, std::string>& apartment) {
        return closed_form_det(a, apartment_from_map(apartment)).str();
      },
      py::arg("arrangement"), py::arg("apartment") = std::map<int, std::string>{});
  m.def(
      "assembly",
      [](const Arrangement& a) {
        const AssemblyMatrix s = assembly(a);
        py::list faces;
        for (const SignVector& f : s.faces) faces.append(f);
        py::list flats;
        for (const Flat& x : s.flats) flats.append(x.str());
        py::list matrix;
        for (int i = 0; i < s.entries.size(); ++i) {
          py::list row;
          for (int j = 0; j < s.entries.size(); ++j) row.append(s.entries.at(i, j).str());
          matrix.append(row);
        }
        py::dict out;
        out["faces"] = faces;
        out["flats"] = flats;
        out["matrix"] = matrix;
        out["det"] = assembly_det(a).str();
        return out;
      },
      py::arg("arrangement"));

  m.def(
      "solution_dimension",
      [](const Arrangement& a, const std::vector<std::pair<std::string, std::string>>& q) {
        const DimensionReport r = solution_dimension(a, q_from_pairs(q));
        return py::make_tuple(r.dimension, r.min_face_count);
      },
      py::arg("arrangement"), py::arg("q"));
  m.def(
      "solve_central",
      [](const Arrangement& a, const std::vector<std::pair<std::string, std::string>>& q,
         const std::string& x0) {
        const AMSolution sol = solve_central(a, q_from_pairs(q), parse_rational(x0));
        py::dict out;
        for (const auto& [face, value] : sol.values) out[py::str(face)] = to_string(value);
        return out;
      },
      py::arg("arrangement"), py::arg("q"), py::arg("x0") = "1");
  m.def(
      "verify_solution",
      [](const Arrangement& a, const std::vector<std::pair<std::string, std::string>>& q,
         const std::map<SignVector, std::string>& x) {
        std::map<SignVector, Rational> values;
        for (const auto& [face, value] : x) values[face] = parse_rational(value);
        return verify_solution(a, q_from_pairs(q), values);
      },
      py::arg("arrangement"), py::arg("q"), py::arg("x"));

  m.def(
      "witt_check",
      [](const Arrangement& a) {
        const WittReport r = witt_check(a);
        py::list violations;
        for (const WittViolation& v : r.violations) {
          violations.append(py::make_tuple(v.identity, v.witness));
        }
        py::dict out;
        out["pass"] = r.pass();
        out["witt_tuples"] = r.witt_tuples;
        out["eqf1_tuples"] = r.eqf1_tuples;
        out["eqf2_tuples"] = r.eqf2_tuples;
        out["prd_tuples"] = r.prd_tuples;
        out["bounded_chambers"] = r.bounded_chambers;
        out["prd_skipped"] = r.prd_skipped;
        out["violations"] = violations;
        return out;
      },
      py::arg("arrangement"));
  m.def(
      "run_checks",
      [](const Arrangement& a, std::uint64_t seed, int points, int trials) {
        CheckOptions opt;
        opt.seed = seed;
        opt.points = points;
        opt.trials = trials;
        py::list out;
        for (const CheckResult& r : run_all_checks(a, opt)) {
          py::dict item;
          item["name"] = r.name;
          item["instances"] = r.instances;
          item["violations"] = r.violations;
          item["skipped"] = r.skipped;
          item["note"] = r.note;
          out.append(item);
        }
        return out;
      },
      py::arg("arrangement"), py::arg("seed") = 0, py::arg("points") = 20,
      py::arg("trials") = 5);
}
