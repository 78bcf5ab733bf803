// Acceptance suite: end-to-end verification of the classification results,
// the structural invariants, and the CLI contract, all in exact arithmetic.
// Prints one pass/fail line per criterion; exits nonzero on any failure.
// Takes the path to the liesym binary as argv[1] (used by criterion 7).

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liesym/catalog.hpp"
#include "liesym/curvature.hpp"
#include "liesym/io.hpp"
#include "liesym/killing.hpp"
#include "liesym/quotient.hpp"
#include "support/process.hpp"
#include "support/random_algebras.hpp"

using namespace liesym;
using namespace liesym::testing;
using nlohmann::json;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  std::function<void(std::ostringstream&)> run;  // appends failure details
};

void expect(std::ostringstream& fails, bool ok, const std::string& what) {
  if (!ok) fails << "\n      - " << what;
}

std::string describe_index(const SymmetryReport& r) {
  std::ostringstream os;
  os << "index=" << r.index << " isotropy=" << r.isotropy_dim;
  return os.str();
}

bool spans_x3(const SymmetryReport& r) {
  return r.index == 1 && r.symmetric_basis.front() == Vector::basis(3, 2);
}

// --- criterion bodies ------------------------------------------------------

void criterion_1a(std::ostringstream& f) {
  const SymmetryReport round = symmetric_subspace(su2_metric(1, 1, 1));
  expect(f, round.index == 3, "bi-invariant: expected index 3, got " + describe_index(round));
  expect(f, round.flags.locally_symmetric, "bi-invariant: locally symmetric flag");
  expect(f, round.flags.constant_curvature && *round.flags.curvature_constant > Scalar(0),
         "bi-invariant: constant positive curvature");

  const SymmetryReport a321 = symmetric_subspace(su2_metric(3, 2, 1));
  expect(f, a321.index == 1 && a321.isotropy_dim == 0,
         "g_{3,2,1}: expected index 1, isotropy 0, got " + describe_index(a321));

  for (const Scalar& l : {Scalar(2), Scalar(3)}) {
    const SymmetryReport r = symmetric_subspace(su2_metric(l, 1, 1));
    expect(f, r.index == 1 && r.isotropy_dim == 1,
           "g_{l,1,1} l=" + l.str() + ": expected index 1, isotropy 1, got " + describe_index(r));
  }

  const SymmetryReport berger = symmetric_subspace(su2_metric(1, 1, Scalar(1, 2)));
  expect(f, berger.index == 1, "g_{1,1,1/2}: expected index 1, got " + describe_index(berger));

  const SymmetryReport generic = symmetric_subspace(su2_metric(3, 2, Scalar(1, 2)));
  expect(f, generic.index == 0, "g_{3,2,1/2}: expected index 0, got " + describe_index(generic));
}

void criterion_1b(std::ostringstream& f) {
  const SymmetryReport on = symmetric_subspace(sl2r_metric(1, 2, 1));
  expect(f, on.index == 1, "g_{1,2,1}: expected index 1, got " + describe_index(on));

  const SymmetryReport off = symmetric_subspace(sl2r_metric(1, 3, 1));
  expect(f, off.index == 0, "g_{1,3,1}: expected index 0, got " + describe_index(off));

  for (const Scalar& l : {Scalar(1, 2), Scalar(1), Scalar(2)}) {
    const SymmetryReport r = symmetric_subspace(sl2r_metric(l, 1, 1));
    expect(f, r.index == 1 && r.isotropy_dim == 1,
           "g_{l,1,1} l=" + l.str() + ": expected index 1, isotropy 1, got " + describe_index(r));
  }
}

void criterion_1c(std::ostringstream& f) {
  std::mt19937_64 rng(1905);
  for (int trial = 0; trial < 5; ++trial) {
    const MetricLieAlgebra a = h1_metric(random_spd_metric(rng));
    const SymmetryReport r = symmetric_subspace(a);
    expect(f, r.index == 1,
           "random SPD metric #" + std::to_string(trial) + ": expected index 1, got " +
               describe_index(r));
  }

  const SymmetryReport std_report = symmetric_subspace(h1_standard());
  Matrix rotation(3, 3);  // X1 ↦ X2, X2 ↦ -X1
  rotation(1, 0) = 1;
  rotation(0, 1) = -1;
  expect(f, std_report.index == 1 && std_report.witnesses.size() == 1,
         "standard metric: single witness expected");
  if (std_report.witnesses.size() == 1) {
    const auto& w = std_report.witnesses.front();
    expect(f, w.value == Vector::basis(3, 2), "witness value is X3");
    expect(f, w.right_derivative == Scalar(-1, 2) * rotation,
           "witness derivative is -1/2 of the rotation X1 -> X2, X2 -> -X1");
  }
}

void criterion_1d(std::ostringstream& f) {
  for (const Scalar& m : {Scalar(1, 4), Scalar(1, 2), Scalar(3, 4)})
    for (const Scalar& n : {Scalar(1), Scalar(3)}) {
      const SymmetryReport r = symmetric_subspace(e2tilde_metric(m, n));
      expect(f, r.index == 0,
             "g_{m,n} m=" + m.str() + " n=" + n.str() + ": expected index 0, got " +
                 describe_index(r));
    }
  const SymmetryReport flat = symmetric_subspace(e2tilde_flat(1, 1));
  expect(f, flat.flags.flat, "identity metric: flat flag");
  expect(f, flat.index == 3, "identity metric: expected index 3, got " + describe_index(flat));
}

void criterion_1e(std::ostringstream& f) {
  for (const Scalar& n : {Scalar(1, 2), Scalar(1), Scalar(2)}) {
    const SymmetryReport r = symmetric_subspace(e11_nu(n));
    expect(f, spans_x3(r),
           "g_n n=" + n.str() + ": expected symmetric subspace span(X3), got " +
               describe_index(r));
  }
  for (const auto& [m, n] : {std::pair{Scalar(2), Scalar(1)}, {Scalar(3), Scalar(1, 2)}}) {
    const SymmetryReport r = symmetric_subspace(e11_munu(m, n));
    expect(f, r.index == 0,
           "g_{m,n} m=" + m.str() + " n=" + n.str() + ": expected index 0, got " +
               describe_index(r));
  }
}

void criterion_2(std::ostringstream& f) {
  std::mt19937_64 rng(577215664);
  int symmetric_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MetricLieAlgebra a = random_milnor_unimodular(rng);
    const SymmetryReport r = symmetric_subspace(a);
    expect(f, r.index == 0 || r.index == 1 || r.index == 3,
           "trial " + std::to_string(trial) + ": index " + std::to_string(r.index) +
               " outside {0, 1, 3}");
    CurvatureCache cache(a);
    const bool symmetric = cache.nabla_riemann(1).is_zero();
    expect(f, (r.index == 3) == symmetric,
           "trial " + std::to_string(trial) + ": index 3 must coincide with parallel curvature");
    if (symmetric) ++symmetric_count;
  }
  expect(f, symmetric_count > 0, "sampler produced no locally symmetric case at all");
  expect(f, symmetric_count < 200, "sampler produced only locally symmetric cases");
}

void criterion_3(std::ostringstream& f) {
  std::vector<MetricLieAlgebra> algebras;
  for (const auto& [group, algebra] : catalog_sample()) algebras.push_back(algebra);
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 50; ++trial) algebras.push_back(random_milnor_unimodular(rng));

  int case_id = 0;
  for (const MetricLieAlgebra& a : algebras) {
    const std::string tag = "case " + std::to_string(case_id++);
    const int n = a.dim();
    expect(f, a.validate().empty(), tag + ": algebra invariants (Jacobi) hold");

    const FrameTensor gamma = levi_civita(a);
    const FrameTensor r = curvature(a, gamma);
    bool compat = true, torsion = true, sym = true, bianchi2 = true;
    auto pairing = [&](int i, int j, int k, int l) {
      return a.inner(r.value({i, j, k}), Vector::basis(n, l));
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!(gamma.value({i, j}) - gamma.value({j, i}) == a.bracket_basis(i, j)))
          torsion = false;
        for (int k = 0; k < n; ++k) {
          if (!(a.inner(gamma.value({i, j}), Vector::basis(n, k)) +
                    a.inner(Vector::basis(n, j), gamma.value({i, k})) ==
                Scalar(0)))
            compat = false;
          if (!(r.value({i, j, k}) + r.value({j, k, i}) + r.value({k, i, j})).is_zero())
            sym = false;
          for (int l = 0; l < n; ++l) {
            if (pairing(i, j, k, l) != -pairing(j, i, k, l)) sym = false;
            if (pairing(i, j, k, l) != -pairing(i, j, l, k)) sym = false;
            if (pairing(i, j, k, l) != pairing(k, l, i, j)) sym = false;
          }
        }
      }
    const FrameTensor nr = covariant_derivative(a, gamma, r);
    for (int m = 0; m < n && bianchi2; ++m)
      for (int i = 0; i < n && bianchi2; ++i)
        for (int j = 0; j < n && bianchi2; ++j)
          for (int k = 0; k < n; ++k)
            if (!(nr.value({m, i, j, k}) + nr.value({i, j, m, k}) + nr.value({j, m, i, k}))
                     .is_zero()) {
              bianchi2 = false;
              break;
            }
    expect(f, compat, tag + ": metric compatibility of the connection");
    expect(f, torsion, tag + ": torsion-freeness of the connection");
    expect(f, sym, tag + ": curvature symmetries");
    expect(f, bianchi2, tag + ": second Bianchi identity");

    // Killing machinery: skewness, linearity, isotropy closure, bracket closure
    CurvatureCache cache(a);
    const IsotropyAlgebra h = isotropy_algebra(cache);
    bool skew = true, linear = true;
    std::vector<Matrix> av;
    for (int i = 0; i < n; ++i) av.push_back(right_invariant_derivative(a, Vector::basis(n, i)));
    for (int i = 0; i < n; ++i) {
      if (!(a.metric() * av[static_cast<std::size_t>(i)] +
            av[static_cast<std::size_t>(i)].transpose() * a.metric())
               .is_zero())
        skew = false;
      for (int j = 0; j < n; ++j) {
        const Vector v = Scalar(3, 2) * Vector::basis(n, i) + Scalar(2) * Vector::basis(n, j);
        Matrix expected = Scalar(3, 2) * av[static_cast<std::size_t>(i)];
        expected += Scalar(2) * av[static_cast<std::size_t>(j)];
        if (!(right_invariant_derivative(a, v) == expected)) linear = false;
      }
    }
    expect(f, skew, tag + ": A_v is metric-skew");
    expect(f, linear, tag + ": A_v is linear in v");

    std::vector<Vector> h_span;
    for (const Matrix& b : h.basis) h_span.push_back(b.vec());
    bool h_closed = true;
    for (const Matrix& b1 : h.basis)
      for (const Matrix& b2 : h.basis)
        if (!solve_in_subspace(commutator(b1, b2).vec(), h_span).has_value()) h_closed = false;
    expect(f, h_closed, tag + ": isotropy algebra closed under commutator");

    std::vector<KillingGenerator> gens;
    for (int i = 0; i < n; ++i)
      gens.push_back({Vector::basis(n, i), av[static_cast<std::size_t>(i)]});
    for (const Matrix& b : h.basis) gens.push_back({Vector(n), b});
    std::vector<Vector> gen_span;
    for (const auto& g : gens) {
      Vector flat(n + n * n);
      for (int i = 0; i < n; ++i) flat[i] = g.value[i];
      const Vector m = g.derivative.vec();
      for (int i = 0; i < n * n; ++i) flat[n + i] = m[i];
      gen_span.push_back(std::move(flat));
    }
    bool closed = true;
    for (const auto& x : gens)
      for (const auto& y : gens) {
        const KillingGenerator b = generator_bracket(a, cache.riemann(), x, y);
        Vector flat(n + n * n);
        for (int i = 0; i < n; ++i) flat[i] = b.value[i];
        const Vector m = b.derivative.vec();
        for (int i = 0; i < n * n; ++i) flat[n + i] = m[i];
        if (!solve_in_subspace(flat, gen_span).has_value()) closed = false;
      }
    expect(f, closed, tag + ": generator space closed under the Killing bracket");
  }
}

void criterion_4(std::ostringstream& f) {
  for (const auto& [group, algebra] : catalog_sample()) {
    const int index = symmetric_subspace(algebra).index;
    const std::string tag = group_name(group);

    for (const Scalar& c : {Scalar(1, 3), Scalar(2), Scalar(7)}) {
      const MetricLieAlgebra scaled(algebra.dim(), algebra.structure(), c * algebra.metric());
      const int scaled_index = symmetric_subspace(scaled).index;
      expect(f, scaled_index == index,
             tag + ": scaling by " + c.str() + " changed the index from " +
                 std::to_string(index) + " to " + std::to_string(scaled_index));
    }
    int auto_id = 0;
    for (const Matrix& t : automorphisms_of(group)) {
      const MetricLieAlgebra pulled = apply_automorphism(algebra, t);
      const int pulled_index = symmetric_subspace(pulled).index;
      expect(f, pulled_index == index,
             tag + ": automorphism #" + std::to_string(auto_id++) + " changed the index from " +
                 std::to_string(index) + " to " + std::to_string(pulled_index));
    }
  }
}

void criterion_5(std::ostringstream& f) {
  auto verdict_of = [](const MetricLieAlgebra& a) {
    return submersion_check(a, symmetric_subspace(a), 20);
  };

  expect(f, verdict_of(h1_standard()).constant, "h1: quotient projection is a submersion");
  for (const Scalar& l : {Scalar(1, 2), Scalar(1)})
    expect(f, verdict_of(sl2r_metric(l, 1, 1)).constant,
           "sl2r g_{l,1,1} l=" + l.str() + ": submersion expected");
  expect(f, verdict_of(su2_metric(2, 1, 1)).constant, "su2 g_{2,1,1}: submersion expected");
  expect(f, verdict_of(su2_metric(1, 1, Scalar(1, 2))).constant,
         "su2 g_{1,1,1/2}: submersion expected");

  for (const Scalar& n : {Scalar(1, 2), Scalar(1), Scalar(2)}) {
    const SubmersionVerdict v = verdict_of(e11_nu(n));
    expect(f, !v.constant && v.first_nonvanishing_order == 1,
           "e11 g_n n=" + n.str() + ": expected failure at order 1");
  }
  const SubmersionVerdict hyped = verdict_of(sl2r_metric(1, 2, 1));
  expect(f, !hyped.constant && hyped.first_nonvanishing_order.value_or(99) <= 2,
         "sl2r g_{1,2,1}: expected failure by order 2");

  // O'Neill constants of the quotient surfaces (frozen after a hand audit of
  // K_base = K + 3/4 |[x,y]^v|^2 / (|x|^2 |y|^2 - <x,y>^2)):
  //   h1 standard:    K(X1,X2) = -3/4, |[X1,X2]^v|^2 = 1      => 0
  //   sl2r g_{1,1,1}: K(X2,X3) = -7,   |[X2,X3]^v|^2 = 4      => -4
  //   su2 g_{2,1,1}:  K(X2,X3) = -1/2, |[X2,X3]^v|^2 = 2      => 1
  {
    const MetricLieAlgebra a = h1_standard();
    const SymmetryReport r = symmetric_subspace(a);
    expect(f, oneill_base_curvature(a, r, Vector::basis(3, 0), Vector::basis(3, 1)) == Scalar(0),
           "h1: base curvature must vanish exactly");
  }
  {
    const MetricLieAlgebra a = sl2r_metric(1, 1, 1);
    const SymmetryReport r = symmetric_subspace(a);
    const Scalar k = oneill_base_curvature(a, r, Vector::basis(3, 1), Vector::basis(3, 2));
    expect(f, k == Scalar(-4), "sl2r g_{1,1,1}: expected base curvature -4, got " + k.str());
    expect(f, k < Scalar(0), "sl2r g_{1,1,1}: base curvature must be negative");
  }
  {
    const MetricLieAlgebra a = su2_metric(2, 1, 1);
    const SymmetryReport r = symmetric_subspace(a);
    const Scalar k = oneill_base_curvature(a, r, Vector::basis(3, 1), Vector::basis(3, 2));
    expect(f, k == Scalar(1), "su2 g_{2,1,1}: expected base curvature 1, got " + k.str());
    expect(f, k > Scalar(0), "su2 g_{2,1,1}: base curvature must be positive");
  }
}

void criterion_6(std::ostringstream& f) {
  for (const Scalar& nu : {Scalar(1, 2), Scalar(1), Scalar(2)}) {
    const MetricLieAlgebra a = e11_nu(nu);
    const FlowNormSeries series =
        flow_norm_derivatives(a, Vector::basis(3, 2), Vector::basis(3, 0), 6);
    Scalar expected(1);
    for (int m = 0; m <= 6; ++m) {
      expect(f, series.derivatives[static_cast<std::size_t>(m)] == expected,
             "nu=" + nu.str() + ": f^(" + std::to_string(m) + ")(0) expected " + expected.str() +
                 ", got " + series.derivatives[static_cast<std::size_t>(m)].str());
      expected *= Scalar(-2);
    }
  }
}

std::string g_binary;  // set from argv[1]

void criterion_7(std::ostringstream& f) {
  if (g_binary.empty()) {
    expect(f, false, "no CLI binary path supplied");
    return;
  }
  const auto a = run_cli(g_binary, "analyze --catalog h1 --json");
  const auto b = run_cli(g_binary, "analyze --catalog h1 --json");
  expect(f, a.exit_code == 0, "analyze exits 0");
  expect(f, a.out == b.out, "reports are byte-identical across runs");

  json report;
  try {
    report = json::parse(a.out);
  } catch (...) {
    expect(f, false, "analyze emits valid JSON");
    return;
  }
  write_file("/tmp/liesym_acceptance_doc.json", report["input"]["algebra"].dump());
  const auto c = run_cli(g_binary, "analyze --file /tmp/liesym_acceptance_doc.json --json");
  expect(f, c.exit_code == 0, "analyze from the serialized document exits 0");
  try {
    const json report2 = json::parse(c.out);
    expect(f, report2["symmetry"] == report["symmetry"],
           "document round trip preserves the analysis");
    expect(f, report2["input"]["algebra"] == report["input"]["algebra"],
           "document round trip preserves the algebra");
  } catch (...) {
    expect(f, false, "round-trip analyze emits valid JSON");
  }

  const auto s1 = run_cli(g_binary, "submersion --catalog sl2r --metric l,m,n=1,1,1 --json");
  expect(f, s1.exit_code == 0, "submersion exits 0");
  try {
    const json sub = json::parse(s1.out);
    expect(f, sub["submersion"]["constant"] == true && sub["submersion"]["base_curvature"] == "-4",
           "submersion report carries the exact base curvature");
  } catch (...) {
    expect(f, false, "submersion emits valid JSON");
  }

  const auto sw1 = run_cli(g_binary, "sweep --catalog e11 --grid n=1/2,1,2");
  const auto sw2 = run_cli(g_binary, "sweep --catalog e11 --grid n=1/2,1,2");
  expect(f, sw1.exit_code == 0 && sw1.out == sw2.out, "sweep is deterministic");
  expect(f, sw1.out.find("e11,nu,1/2,,,ok,1,0,3") != std::string::npos,
         "sweep rows carry the classification");

  write_file("/tmp/liesym_acceptance_float.json",
             R"({"dimension":3,"brackets":[],"metric":[[0.5,0,0],[0,1,0],[0,0,1]]})");
  const auto bad = run_cli(g_binary, "analyze --file /tmp/liesym_acceptance_float.json");
  expect(f, bad.exit_code == 1, "float in input exits 1");
  expect(f, bad.err.find("floating-point") != std::string::npos, "float rejection is explicit");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];

  const std::vector<Criterion> criteria = {
      {"1a", "su2 catalog verdicts (exact)", criterion_1a},
      {"1b", "sl2r catalog verdicts (exact)", criterion_1b},
      {"1c", "h1 verdicts and the exact parallel witness", criterion_1c},
      {"1d", "e2tilde verdicts: index 0 off the flat locus, 3 on it", criterion_1d},
      {"1e", "e11 verdicts for both metric families", criterion_1e},
      {"2", "200 random unimodular algebras: index in {0,1,3}, 3 iff parallel curvature",
       criterion_2},
      {"3", "structural invariants on catalog + 50 random algebras", criterion_3},
      {"4", "index invariant under metric scaling and automorphisms", criterion_4},
      {"5", "submersion verdicts and exact O'Neill base curvatures", criterion_5},
      {"6", "flow-derivative oracle f^(m)(0) = (-2)^m", criterion_6},
      {"7", "CLI contract: round trips, determinism, float rejection", criterion_7},
  };

  const auto suite_start = std::chrono::steady_clock::now();
  int failures = 0;

  // single-analysis latency probe
  {
    const auto t0 = std::chrono::steady_clock::now();
    symmetric_subspace(sl2r_metric(1, 2, 1));
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    std::cout << (ms < 1000 ? "[PASS]" : "[FAIL]") << " t0  single analysis in " << ms
              << " ms (< 1000 ms)\n";
    if (ms >= 1000) ++failures;
  }

  for (const auto& criterion : criteria) {
    std::ostringstream fails;
    const auto t0 = std::chrono::steady_clock::now();
    criterion.run(fails);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool ok = fails.str().empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion.id << "  " << criterion.title << " ("
              << ms << " ms)" << (ok ? "" : fails.str()) << "\n";
    if (!ok) ++failures;
  }

  const auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - suite_start)
                            .count();
  std::cout << (total_ms < 60000 ? "[PASS]" : "[FAIL]") << " t1  full suite in " << total_ms
            << " ms (< 60000 ms)\n";
  if (total_ms >= 60000) ++failures;

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion/criteria FAILED\n";
  return 1;
}
