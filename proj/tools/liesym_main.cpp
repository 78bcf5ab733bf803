// liesym: exact analysis of left-invariant metrics on low-dimensional Lie
// groups. Subcommands: analyze, sweep, submersion, validate.
//
// Exit codes: 0 success, 1 invalid input, 2 internal iteration cap exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "liesym/catalog.hpp"
#include "liesym/errors.hpp"
#include "liesym/io.hpp"
#include "liesym/killing.hpp"
#include "liesym/quotient.hpp"
#include "liesym/version.hpp"

namespace {

using namespace liesym;

struct SelectorOptions {
  std::string catalog;
  std::string metric_spec;
  std::string file;
};

struct MetricSpec {
  std::vector<std::string> names;
  std::vector<Scalar> values;
};

MetricSpec parse_metric_spec(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw invalid_input("--metric expects name[,name...]=value[,value...], got \"" + spec + "\"");
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
  };
  MetricSpec out;
  out.names = split(spec.substr(0, eq));
  for (const auto& v : split(spec.substr(eq + 1))) out.values.push_back(Scalar::parse(v));
  const bool is_full_metric = out.names.size() == 1 && out.names.front() == "g";
  if (out.names.empty() || (!is_full_metric && out.names.size() != out.values.size()))
    throw invalid_input("--metric has " + std::to_string(out.names.size()) + " name(s) but " +
                        std::to_string(out.values.size()) + " value(s)");
  return out;
}

Matrix upper_triangle_metric(const std::vector<Scalar>& v) {
  if (v.size() != 6)
    throw invalid_input("g= expects the 6 upper-triangle entries g11,g12,g13,g22,g23,g33");
  Matrix g(3, 3);
  g(0, 0) = v[0];
  g(0, 1) = g(1, 0) = v[1];
  g(0, 2) = g(2, 0) = v[2];
  g(1, 1) = v[3];
  g(1, 2) = g(2, 1) = v[4];
  g(2, 2) = v[5];
  return g;
}

CatalogEntry entry_from_spec(Group group, const std::optional<MetricSpec>& spec) {
  CatalogEntry entry;
  entry.group = group;
  const auto names_are = [&](std::initializer_list<const char*> expected) {
    if (!spec || spec->names.size() != expected.size()) return false;
    auto it = expected.begin();
    for (const auto& n : spec->names)
      if (n != *it++) return false;
    return true;
  };
  switch (group) {
    case Group::SU2:
    case Group::SL2R:
      if (!names_are({"l", "m", "n"}))
        throw invalid_input(group_name(group) + " needs --metric l,m,n=<l>,<m>,<n>");
      entry.family = "lmn";
      entry.params = spec->values;
      return entry;
    case Group::E2tilde:
      if (names_are({"m", "n"})) {
        entry.family = "mn";
        entry.params = spec->values;
        return entry;
      }
      if (names_are({"a", "b"})) {
        entry.family = "flat";
        entry.params = spec->values;
        return entry;
      }
      throw invalid_input("e2tilde needs --metric m,n=... (diag(1,m,n)) or a,b=... (flat diag(a,a,b))");
    case Group::E11:
      if (names_are({"n"})) {
        entry.family = "nu";
        entry.params = spec->values;
        return entry;
      }
      if (names_are({"m", "n"})) {
        entry.family = "munu";
        entry.params = spec->values;
        return entry;
      }
      throw invalid_input("e11 needs --metric n=... (diag(1,1,n)) or m,n=... ([[1,1,0],[1,m,0],[0,0,n]])");
    case Group::H1:
    case Group::R3:
      if (!spec) {
        entry.family = "standard";
        return entry;
      }
      if (spec->names.size() == 1 && spec->names.front() == "g") {
        entry.family = "custom";
        entry.metric = upper_triangle_metric(spec->values);
        return entry;
      }
      throw invalid_input(group_name(group) +
                          " takes no --metric (identity) or --metric g=<6 upper-triangle entries>");
  }
  throw invalid_input("unsupported catalog selector");
}

AlgebraDocument load_input(const SelectorOptions& sel, bool require_valid = true) {
  if (!sel.file.empty() && !sel.catalog.empty())
    throw invalid_input("--catalog and --file are mutually exclusive");
  if (!sel.file.empty()) {
    std::ifstream in(sel.file);
    if (!in) throw invalid_input("cannot open file: " + sel.file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    AlgebraDocument doc = parse_algebra_document_text(buffer.str());
    if (require_valid) {
      const auto violations = doc.algebra.validate();
      if (!violations.empty()) {
        std::ostringstream os;
        os << "invalid algebra:";
        for (const auto& v : violations) os << "\n  " << v;
        throw invalid_input(os.str());
      }
    }
    return doc;
  }
  if (sel.catalog.empty()) throw invalid_input("one of --catalog or --file is required");
  const auto group = group_from_name(sel.catalog);
  if (!group)
    throw invalid_input("unknown catalog group \"" + sel.catalog +
                        "\" (expected r3, su2, sl2r, h1, e2tilde, e11)");
  std::optional<MetricSpec> spec;
  if (!sel.metric_spec.empty()) spec = parse_metric_spec(sel.metric_spec);
  CatalogEntry entry = entry_from_spec(*group, spec);
  AlgebraDocument doc{entry.name(), catalog(entry)};
  return doc;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw invalid_input("cannot open output file: " + out_path);
  out << text;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string render_report_text(const AlgebraDocument& doc, const SymmetryReport& report) {
  std::ostringstream os;
  os << "input: " << (doc.name ? *doc.name : std::string("(unnamed)")) << "  ["
     << input_hash(doc) << "]\n";
  os << "dimension: " << doc.algebra.dim()
     << ", unimodular: " << yesno(is_unimodular(doc.algebra)) << "\n";
  os << "flags: flat=" << yesno(report.flags.flat)
     << ", locally symmetric=" << yesno(report.flags.locally_symmetric)
     << ", constant curvature=" << yesno(report.flags.constant_curvature);
  if (report.flags.curvature_constant) os << " (K = " << *report.flags.curvature_constant << ")";
  os << "\n";
  os << "index of symmetry: " << report.index << "\n";
  os << "symmetric subspace basis:";
  if (report.symmetric_basis.empty()) os << " (trivial)";
  os << "\n";
  for (const auto& v : report.symmetric_basis) os << "  " << v.str() << "\n";
  os << "isotropy dimension: " << report.isotropy_dim << " (prolongation stabilized at order "
     << report.stabilization_order << ")\n";
  os << "isometry algebra dimension: " << report.isometry_dim << "\n";
  for (const auto& w : report.witnesses) {
    os << "parallel witness: value " << w.value.str() << ", right-invariant derivative "
       << w.right_derivative.str() << ", isotropy compensation "
       << w.isotropy_compensation.str() << "\n";
  }
  os << "applies to: " << SymmetryReport::applies_to << "\n";
  return os.str();
}

int cmd_analyze(const SelectorOptions& sel, bool as_json, int derivative_order,
                const std::string& out_path) {
  const AlgebraDocument doc = load_input(sel);
  const SymmetryReport report = symmetric_subspace(doc.algebra);

  std::optional<SubmersionVerdict> verdict;
  std::optional<Scalar> base_curvature;
  if (report.index == 1) {
    verdict = submersion_check(doc.algebra, report, derivative_order);
    const auto horizontal = doc.algebra.orthogonal_complement({report.symmetric_basis.front()});
    if (verdict->constant && horizontal.size() == 2)
      base_curvature = oneill_base_curvature(doc.algebra, report, horizontal[0], horizontal[1]);
  }

  if (as_json) {
    write_output(out_path,
                 build_report_document(doc, report, verdict, base_curvature, derivative_order)
                         .dump(2) +
                     "\n");
  } else {
    std::string text = render_report_text(doc, report);
    if (verdict) {
      std::ostringstream os;
      os << "quotient by the foliation of symmetry: ";
      if (verdict->constant) {
        os << "Riemannian submersion (norms constant to derivative order "
           << verdict->order_checked << "), base curvature " << *base_curvature << "\n";
      } else {
        os << "not a Riemannian submersion (first nonvanishing norm derivative at order "
           << *verdict->first_nonvanishing_order << ")\n";
      }
      text += os.str();
    }
    write_output(out_path, text);
  }
  return 0;
}

int cmd_validate(const SelectorOptions& sel, bool as_json, const std::string& out_path) {
  const AlgebraDocument doc = load_input(sel, /*require_valid=*/false);
  const auto violations = doc.algebra.validate();
  if (as_json) {
    nlohmann::json out;
    out["valid"] = violations.empty();
    out["violations"] = violations;
    write_output(out_path, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    if (violations.empty()) {
      os << "ok\n";
    } else {
      for (const auto& v : violations) os << "violation: " << v << "\n";
    }
    write_output(out_path, os.str());
  }
  return violations.empty() ? 0 : 1;
}

int cmd_submersion(const SelectorOptions& sel, bool as_json, int derivative_order,
                   const std::string& out_path) {
  const AlgebraDocument doc = load_input(sel);
  const SymmetryReport report = symmetric_subspace(doc.algebra);
  const SubmersionVerdict verdict = submersion_check(doc.algebra, report, derivative_order);
  std::optional<Scalar> base_curvature;
  const auto horizontal = doc.algebra.orthogonal_complement({report.symmetric_basis.front()});
  if (verdict.constant && horizontal.size() == 2)
    base_curvature = oneill_base_curvature(doc.algebra, report, horizontal[0], horizontal[1]);
  if (as_json) {
    write_output(out_path,
                 build_report_document(doc, report, verdict, base_curvature, derivative_order)
                         .dump(2) +
                     "\n");
    return 0;
  }
  std::ostringstream os;
  os << "input: " << (doc.name ? *doc.name : std::string("(unnamed)")) << "\n";
  os << "symmetric direction: " << report.symmetric_basis.front().str() << "\n";
  if (verdict.constant) {
    os << "verdict: Riemannian submersion (squared norms of horizontal right-invariant fields\n"
       << "  have vanishing derivatives through order " << verdict.order_checked << ")\n";
    if (base_curvature) os << "base curvature (O'Neill): " << *base_curvature << "\n";
  } else {
    os << "verdict: not a Riemannian submersion (first nonvanishing squared-norm derivative\n"
       << "  at order " << *verdict.first_nonvanishing_order << ")\n";
  }
  write_output(out_path, os.str());
  return 0;
}

// --- sweep ---------------------------------------------------------------

struct GridAxis {
  std::string name;
  std::vector<Scalar> values;  // ascending
};

std::vector<GridAxis> parse_grid(const std::vector<std::string>& specs) {
  std::vector<GridAxis> axes;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw invalid_input("--grid expects name=v1,v2,..., got \"" + spec + "\"");
    GridAxis axis;
    axis.name = spec.substr(0, eq);
    std::stringstream ss(spec.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ',')) axis.values.push_back(Scalar::parse(item));
    if (axis.values.empty()) throw invalid_input("--grid axis \"" + axis.name + "\" is empty");
    std::sort(axis.values.begin(), axis.values.end());
    axis.values.erase(std::unique(axis.values.begin(), axis.values.end()), axis.values.end());
    for (const auto& existing : axes)
      if (existing.name == axis.name)
        throw invalid_input("--grid axis \"" + axis.name + "\" given twice");
    axes.push_back(std::move(axis));
  }
  return axes;
}

/// Sorts the axes into canonical parameter order and names the family.
std::string sweep_family(Group group, std::vector<GridAxis>& axes) {
  std::sort(axes.begin(), axes.end(),
            [](const GridAxis& a, const GridAxis& b) { return a.name < b.name; });
  const auto is = [&](std::initializer_list<const char*> expected) {
    if (axes.size() != expected.size()) return false;
    auto it = expected.begin();
    for (const auto& a : axes)
      if (a.name != *it++) return false;
    return true;
  };
  switch (group) {
    case Group::SU2:
    case Group::SL2R:
      if (is({"l", "m", "n"})) return "lmn";
      throw invalid_input(group_name(group) + " sweep needs axes l, m, n");
    case Group::E2tilde:
      if (is({"m", "n"})) return "mn";
      if (is({"a", "b"})) return "flat";
      throw invalid_input("e2tilde sweep needs axes m, n or a, b");
    case Group::E11:
      if (is({"n"})) return "nu";
      if (is({"m", "n"})) return "munu";
      throw invalid_input("e11 sweep needs axes n or m, n");
    case Group::H1:
    case Group::R3:
      throw invalid_input(group_name(group) + " has no parameterized sweep family");
  }
  throw invalid_input("unsupported sweep group");
}

int sweep_thread_count(std::size_t n_rows) {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("LIESYM_THREADS")) {
    try {
      threads = std::max(1, std::stoi(env));
    } catch (...) {
      throw invalid_input("LIESYM_THREADS must be a positive integer");
    }
  }
  return std::min<int>(threads, static_cast<int>(std::max<std::size_t>(n_rows, 1)));
}

int cmd_sweep(const std::string& catalog_name, const std::vector<std::string>& grid_specs,
              const std::string& out_path) {
  const auto group = group_from_name(catalog_name);
  if (!group) throw invalid_input("unknown catalog group \"" + catalog_name + "\"");
  auto axes = parse_grid(grid_specs);
  const std::string family = sweep_family(*group, axes);

  // Lexicographic rows over the sorted axes.
  std::vector<std::vector<Scalar>> points;
  std::vector<Scalar> current(axes.size());
  const std::function<void(std::size_t)> emit = [&](std::size_t axis) {
    if (axis == axes.size()) {
      points.push_back(current);
      return;
    }
    for (const auto& v : axes[axis].values) {
      current[axis] = v;
      emit(axis + 1);
    }
  };
  emit(0);

  std::vector<std::string> rows(points.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t at = cursor.fetch_add(1);
      if (at >= points.size()) return;
      const auto& p = points[at];
      std::ostringstream row;
      row << group_name(*group) << "," << family;
      for (std::size_t i = 0; i < 3; ++i) row << "," << (i < p.size() ? p[i].str() : "");
      try {
        CatalogEntry entry{*group, family, p, std::nullopt};
        const MetricLieAlgebra a = catalog(entry);
        const SymmetryReport report = symmetric_subspace(a);
        row << ",ok," << report.index << "," << report.isotropy_dim << ","
            << report.isometry_dim << "," << (report.flags.flat ? "true" : "false") << ","
            << (report.flags.locally_symmetric ? "true" : "false") << ","
            << (report.flags.constant_curvature ? "true" : "false");
      } catch (const error& e) {
        // row-level problems (constraint violations) become warning rows so
        // the sweep as a whole still completes; exceptions must not cross
        // the thread boundary
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), ',', ';');
        row << ",skipped(" << msg << "),,,,,,";
      }
      rows[at] = row.str();
    }
  };
  const int n_threads = sweep_thread_count(points.size());
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream os;
  os << "group,family,p1,p2,p3,status,index,isotropy_dim,isometry_dim,flat,"
        "locally_symmetric,constant_curvature\n";
  for (const auto& row : rows) os << row << "\n";
  write_output(out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) + " " + kToolVersion +
               " - exact index-of-symmetry analysis of metric Lie algebras"};
  app.require_subcommand(1);

  SelectorOptions sel;
  bool as_json = false;
  int derivative_order = 20;
  std::string out_path;
  std::string sweep_catalog;
  std::vector<std::string> grid_specs;

  const std::string catalog_help =
      "catalog group: r3, su2, sl2r, h1, e2tilde, e11. Metric families and constraints:\n"
      "  su2:     --metric l,m,n=...   diag(l,m,n), l >= m >= n > 0\n"
      "  sl2r:    --metric l,m,n=...   diag(l,m,n), l > 0, m >= n > 0\n"
      "  e2tilde: --metric m,n=...     diag(1,m,n), 0 < m < 1, n > 0\n"
      "           --metric a,b=...     flat diag(a,a,b), a, b > 0\n"
      "  e11:     --metric n=...       diag(1,1,n), n > 0\n"
      "           --metric m,n=...     [[1,1,0],[1,m,0],[0,0,n]], m > 1, n > 0\n"
      "  h1, r3:  default identity, or --metric g=g11,g12,g13,g22,g23,g33 (SPD)";

  auto add_selector = [&](CLI::App* cmd) {
    cmd->add_option("--catalog", sel.catalog, catalog_help);
    cmd->add_option("--metric", sel.metric_spec, "metric family parameters, name[,..]=value[,..]");
    cmd->add_option("--file", sel.file, "algebra document (JSON) path");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full symmetry analysis of one algebra");
  add_selector(analyze);
  analyze->add_flag("--json", as_json, "emit the machine-readable report");
  analyze->add_option("--derivative-order", derivative_order,
                      "derivative order for the submersion check (default 20)");
  analyze->add_option("--out", out_path, "write output to a file instead of stdout");

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate a catalog family over a parameter grid");
  sweep->add_option("--catalog", sweep_catalog, "catalog group to sweep")->required();
  sweep->add_option("--grid", grid_specs, "grid axis, name=v1,v2,... (repeatable)")->required();
  sweep->add_option("--out", out_path, "write CSV to a file instead of stdout");

  CLI::App* submersion =
      app.add_subcommand("submersion", "Riemannian-submersion check for the symmetry quotient");
  add_selector(submersion);
  submersion->add_flag("--json", as_json, "emit the machine-readable report");
  submersion->add_option("--derivative-order", derivative_order,
                         "derivative order for the constancy check (default 20)");
  submersion->add_option("--out", out_path, "write output to a file instead of stdout");

  CLI::App* validate = app.add_subcommand("validate", "check the algebra invariants");
  add_selector(validate);
  validate->add_flag("--json", as_json, "emit the result as JSON");
  validate->add_option("--out", out_path, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (analyze->parsed()) return cmd_analyze(sel, as_json, derivative_order, out_path);
    if (sweep->parsed()) return cmd_sweep(sweep_catalog, grid_specs, out_path);
    if (submersion->parsed()) return cmd_submersion(sel, as_json, derivative_order, out_path);
    if (validate->parsed()) return cmd_validate(sel, as_json, out_path);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
