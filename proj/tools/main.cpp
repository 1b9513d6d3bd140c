// varch: Varchenko matrices, determinant factorizations and Aguiar-Mahajan
// systems of hyperplane arrangements given as sign-vector systems.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "varch/amsystem.hpp"
#include "varch/checks.hpp"
#include "varch/json_io.hpp"
#include "varch/varchenko.hpp"

namespace {

using namespace varch;

struct Options {
  std::string arrangement;
  std::string apartment;
  std::string flat;
  std::string qpath;
  std::string x0 = "1";
  std::string method = "bareiss";
  int points = 20;
  int trials = 5;
  std::uint64_t seed = 0;
  std::string format;  // resolved per subcommand when not given
  std::string output;
  std::string which;
  bool has_apartment = false;
  bool has_flat = false;
};

std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string text;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    text += line;
    text += '\n';
  }
  return text;
}

std::vector<std::vector<std::string>> matrix_cells(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) cells[i].push_back(m.at(i, j).str());
  }
  return cells;
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Json closed_form_json(const std::vector<WeightedFace>& wf) {
  Json arr = Json::array();
  for (const WeightedFace& w : wf) {
    arr.push_back(Json{{"face", w.face}, {"weight", w.weight.str()}, {"multiplicity", w.multiplicity}});
  }
  return arr;
}

struct Scope {
  VarchenkoMatrix vm;
  std::vector<WeightedFace> closed_form;
  Polynomial closed_form_det;
  bool has_closed_form = false;
};

Scope scoped_matrix(const Arrangement& a, const Options& opt) {
  if (opt.has_apartment && opt.has_flat) {
    throw InputError("--apartment and --flat are mutually exclusive");
  }
  Scope s;
  if (opt.has_flat) {
    const Flat x = parse_flat(opt.flat);
    s.vm = varchenko_matrix_restriction(a, x);
    s.closed_form = weighted_faces_in(a, x);
    s.closed_form_det = closed_form_det_restriction(a, x);
    s.has_closed_form = true;
    return s;
  }
  Apartment k;
  if (opt.has_apartment) k = load_apartment(opt.apartment);
  s.vm = varchenko_matrix(a, k);
  if (a.mode() == Mode::full) {
    s.closed_form = weighted_faces(a, k);
    s.closed_form_det = closed_form_det(a, k);
    s.has_closed_form = true;
  }
  return s;
}

int cmd_faces(const Arrangement& a, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    Json faces = Json::array();
    for (const Face& f : a.faces()) {
      Json item{{"sign", f.sign}};
      if (a.mode() == Mode::full) item["rank"] = f.rank;
      faces.push_back(item);
    }
    Json doc{{"m", a.m()},
             {"mode", a.mode() == Mode::full ? "full" : "chambers_only"},
             {"faces", faces}};
    out << doc.dump() << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const Face& f : a.faces()) {
    if (a.mode() == Mode::full) {
      rows.push_back({f.sign, std::to_string(f.rank)});
    } else {
      rows.push_back({f.sign});
    }
  }
  out << render_grid(rows);
  return 0;
}

int cmd_validate(const Arrangement& a, const Options& opt, std::ostream& out) {
  const ValidationReport report = a.validate();
  if (opt.format == "json") {
    Json issues = Json::array();
    for (const ValidationIssue& i : report.issues) {
      issues.push_back(Json{{"check", i.check}, {"witness", i.witness}});
    }
    out << Json{{"valid", report.pass}, {"issues", issues}}.dump() << '\n';
  } else if (report.pass) {
    out << "ok\n";
  } else {
    for (const ValidationIssue& i : report.issues) out << i.check << ": " << i.witness << '\n';
  }
  return report.pass ? 0 : 1;
}

int cmd_varchenko(const Arrangement& a, const Options& opt, std::ostream& out) {
  const Scope s = scoped_matrix(a, opt);
  const Polynomial det = det_bareiss(s.vm.entries);
  if (opt.format == "json") {
    Json doc{{"chambers", s.vm.chambers}, {"matrix", matrix_json(s.vm.entries)}, {"det", det.str()}};
    if (s.has_closed_form) doc["closed_form"] = closed_form_json(s.closed_form);
    out << doc.dump() << '\n';
    return 0;
  }
  out << "chambers:";
  for (const SignVector& c : s.vm.chambers) out << ' ' << c;
  out << '\n';
  out << render_grid(matrix_cells(s.vm.entries));
  out << "det: " << det.str() << '\n';
  return 0;
}

int cmd_det(const Arrangement& a, const Options& opt, std::ostream& out) {
  if (opt.method == "eval") {
    if (opt.has_flat) throw InputError("--method eval does not apply to flat restrictions");
    Apartment k;
    if (opt.has_apartment) k = load_apartment(opt.apartment);
    std::mt19937_64 rng(opt.seed);
    int agreed = 0;
    for (int i = 0; i < opt.points; ++i) {
      if (thdet_eval_holds(a, k, seeded_assignment(a.m(), rng))) ++agreed;
    }
    const bool pass = agreed == opt.points;
    if (opt.format == "json") {
      out << Json{{"points", opt.points}, {"agreed", agreed}, {"pass", pass}}.dump() << '\n';
    } else {
      out << "points: " << opt.points << '\n'
          << "agreed: " << agreed << '\n'
          << (pass ? "pass\n" : "FAIL\n");
    }
    return pass ? 0 : 1;
  }
  const Scope s = scoped_matrix(a, opt);
  const Polynomial det = det_bareiss(s.vm.entries);
  if (opt.format == "json") {
    out << Json{{"det", det.str()}}.dump() << '\n';
  } else {
    out << det.str() << '\n';
  }
  return 0;
}

int cmd_weights(const Arrangement& a, const Options& opt, std::ostream& out) {
  if (opt.has_apartment && opt.has_flat) {
    throw InputError("--apartment and --flat are mutually exclusive");
  }
  std::vector<WeightedFace> wf;
  Polynomial det;
  if (opt.has_flat) {
    const Flat x = parse_flat(opt.flat);
    wf = weighted_faces_in(a, x);
    det = closed_form_det_restriction(a, x);
  } else {
    Apartment k;
    if (opt.has_apartment) k = load_apartment(opt.apartment);
    wf = weighted_faces(a, k);
    det = closed_form_det(a, k);
  }
  if (opt.format == "json") {
    out << Json{{"closed_form", closed_form_json(wf)}, {"det", det.str()}}.dump() << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const WeightedFace& w : wf) {
    rows.push_back({w.face, w.weight.str(), std::to_string(w.multiplicity)});
  }
  out << render_grid(rows);
  out << "det: " << det.str() << '\n';
  return 0;
}

int cmd_assembly(const Arrangement& a, const Options& opt, std::ostream& out) {
  const AssemblyMatrix s = assembly(a);
  const Polynomial det = assembly_det(a);
  if (opt.format == "json") {
    Json flats = Json::array();
    for (const Flat& x : s.flats) flats.push_back(x.str());
    out << Json{{"faces", s.faces},
                {"flats", flats},
                {"matrix", matrix_json(s.entries)},
                {"det", det.str()}}
               .dump()
        << '\n';
    return 0;
  }
  out << "faces:";
  for (const SignVector& f : s.faces) out << ' ' << f;
  out << '\n';
  out << render_grid(matrix_cells(s.entries));
  out << "det: " << det.str() << '\n';
  return 0;
}

int cmd_am_dim(const Arrangement& a, const Options& opt, std::ostream& out) {
  if (opt.qpath.empty()) throw InputError("am-dim needs --q");
  const QAssignment q = load_qassignment(opt.qpath);
  const DimensionReport report = solution_dimension(a, q);
  if (opt.format == "text") {
    out << "dimension: " << report.dimension << '\n'
        << "min_faces: " << report.min_face_count << '\n';
  } else {
    out << Json{{"dimension", report.dimension}, {"min_faces", report.min_face_count}}.dump()
        << '\n';
  }
  return report.dimension == report.min_face_count ? 0 : 1;
}

int cmd_am_solve(const Arrangement& a, const Options& opt, std::ostream& out) {
  if (opt.qpath.empty()) throw InputError("am-solve needs --q");
  const QAssignment q = load_qassignment(opt.qpath);
  const Rational x0 = parse_rational(opt.x0);
  const AMSolution sol = solve_central(a, q, x0);
  const bool verified = verify_solution(a, q, sol.values);
  if (opt.format == "text") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [face, value] : sol.values) rows.push_back({face, to_string(value)});
    out << render_grid(rows);
    out << "verified: " << (verified ? "true" : "false") << '\n';
  } else {
    Json x = Json::object();
    for (const auto& [face, value] : sol.values) x[face] = to_string(value);
    out << Json{{"x", x}, {"verified", verified}}.dump() << '\n';
  }
  return verified ? 0 : 1;
}

int cmd_check(const Arrangement& a, const Options& opt, std::ostream& out) {
  CheckOptions copt;
  copt.seed = opt.seed;
  copt.points = opt.points;
  copt.trials = opt.trials;
  copt.force_eval = opt.method == "eval";
  std::vector<CheckResult> results;
  if (opt.which == "all") {
    results = run_all_checks(a, copt);
  } else if (opt.which == "distance") {
    results = distance_checks(a);
  } else if (opt.which == "witt") {
    results = witt_checks(a);
  } else {  // prd
    for (CheckResult& r : witt_checks(a)) {
      if (r.name == "prd") results.push_back(std::move(r));
    }
  }
  int failures = 0;
  int skipped = 0;
  for (const CheckResult& r : results) {
    if (r.skipped) ++skipped;
    if (!r.skipped && r.violations > 0) ++failures;
  }
  if (opt.format == "json") {
    Json checks = Json::array();
    for (const CheckResult& r : results) {
      checks.push_back(Json{{"name", r.name},
                            {"instances", r.instances},
                            {"violations", r.violations},
                            {"skipped", r.skipped},
                            {"note", r.note},
                            {"samples", r.samples}});
    }
    out << Json{{"checks", checks}, {"failures", failures}, {"pass", failures == 0}, {"seed", opt.seed}}
               .dump()
        << '\n';
  } else {
    for (const CheckResult& r : results) {
      if (r.skipped) {
        out << r.name << ": skip";
        if (!r.note.empty()) out << " (" << r.note << ")";
        out << '\n';
      } else if (r.violations == 0) {
        out << r.name << ": pass instances=" << r.instances;
        if (!r.note.empty()) out << " (" << r.note << ")";
        out << '\n';
      } else {
        out << r.name << ": FAIL violations=" << r.violations << " instances=" << r.instances;
        if (!r.samples.empty()) out << " witness=" << r.samples.front();
        out << '\n';
      }
    }
    out << "summary: " << (failures == 0 ? "pass" : "FAIL") << " checks=" << results.size()
        << " failures=" << failures << " skipped=" << skipped << " seed=" << opt.seed << '\n';
  }
  return failures == 0 ? 0 : 1;
}

int dispatch(const std::string& name, const Options& opt) {
  const Arrangement a = load_arrangement(opt.arrangement);
  std::ostringstream buffer;
  int code = 0;
  if (name == "faces") {
    code = cmd_faces(a, opt, buffer);
  } else if (name == "validate") {
    code = cmd_validate(a, opt, buffer);
  } else if (name == "varchenko") {
    code = cmd_varchenko(a, opt, buffer);
  } else if (name == "det") {
    code = cmd_det(a, opt, buffer);
  } else if (name == "weights") {
    code = cmd_weights(a, opt, buffer);
  } else if (name == "assembly") {
    code = cmd_assembly(a, opt, buffer);
  } else if (name == "am-dim") {
    code = cmd_am_dim(a, opt, buffer);
  } else if (name == "am-solve") {
    code = cmd_am_solve(a, opt, buffer);
  } else {
    code = cmd_check(a, opt, buffer);
  }
  if (opt.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(opt.output);
    if (!file) throw InputError("cannot open output file " + opt.output);
    file << buffer.str();
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Varchenko matrices and Aguiar-Mahajan systems of sign-vector arrangements"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("arrangement", opt.arrangement, "arrangement JSON file")->required();
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", opt.output, "write the result to a file instead of stdout");
    return sub;
  };
  const auto add_scope = [&](CLI::App* sub) {
    sub->add_option("--apartment", opt.apartment, "apartment JSON file");
    sub->add_option("--flat", opt.flat, "flat as comma-separated hyperplane indices");
    return sub;
  };

  CLI::App* c_faces = add_common(app.add_subcommand("faces", "list the faces"));
  CLI::App* c_validate = add_common(app.add_subcommand("validate", "check the input invariants"));
  CLI::App* c_varchenko =
      add_scope(add_common(app.add_subcommand("varchenko", "print the Varchenko matrix")));
  CLI::App* c_det =
      add_scope(add_common(app.add_subcommand("det", "determinant of the Varchenko matrix")));
  c_det->add_option("--method", opt.method, "bareiss (symbolic) or eval (seeded points)")
      ->check(CLI::IsMember({"bareiss", "eval"}));
  c_det->add_option("--points", opt.points, "evaluation points for --method eval");
  c_det->add_option("--seed", opt.seed, "seed for the evaluation points");
  CLI::App* c_weights =
      add_scope(add_common(app.add_subcommand("weights", "face weights and multiplicities")));
  CLI::App* c_assembly = add_common(app.add_subcommand("assembly", "print the assembly matrix"));
  CLI::App* c_am_dim =
      add_common(app.add_subcommand("am-dim", "solution dimension of the linear system"));
  c_am_dim->add_option("--q", opt.qpath, "q-assignment JSON file")->required();
  CLI::App* c_am_solve = add_common(
      app.add_subcommand("am-solve", "solve the linear system of a central arrangement"));
  c_am_solve->add_option("--q", opt.qpath, "q-assignment JSON file")->required();
  c_am_solve->add_option("--x0", opt.x0, "value pinned at the center");
  CLI::App* c_check = app.add_subcommand("check", "run the identity checks");
  c_check->add_option("which", opt.which, "witt, distance, prd or all")
      ->required()
      ->check(CLI::IsMember({"witt", "distance", "prd", "all"}));
  add_common(c_check);
  c_check->add_option("--seed", opt.seed, "seed for randomized checks");
  c_check->add_option("--points", opt.points, "evaluation points for determinant checks");
  c_check->add_option("--trials", opt.trials, "q-assignment draws for linear-system checks");
  c_check->add_option("--method", opt.method, "bareiss or eval for the determinant checks")
      ->check(CLI::IsMember({"bareiss", "eval"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (CLI::App* sub : {c_faces, c_validate, c_varchenko, c_det, c_weights, c_assembly, c_am_dim,
                        c_am_solve, c_check}) {
    if (!sub->parsed()) continue;
    const CLI::Option* ap = sub->get_option_no_throw("--apartment");
    const CLI::Option* fl = sub->get_option_no_throw("--flat");
    opt.has_apartment = ap != nullptr && ap->count() > 0;
    opt.has_flat = fl != nullptr && fl->count() > 0;
    if (opt.format.empty()) {
      const std::string& name = sub->get_name();
      opt.format = (name == "am-dim" || name == "am-solve") ? "json" : "text";
    }
    try {
      return dispatch(sub->get_name(), opt);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return 2;
}
