// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance and runtime budget in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rompoly/checks.hpp"
#include "rompoly/potentials.hpp"
#include "rompoly/quad.hpp"

using namespace rompoly;

namespace {

struct Criterion {
  int id;
  std::string label;
  bool passed;
  double seconds;
  double budget_seconds; // 0 = no stated budget
  std::string detail;
};

std::vector<Criterion> g_results;

void run(int id, const std::string& label, double budget,
         const std::function<std::pair<bool, std::string>()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    const auto [res, msg] = body();
    ok = res;
    detail = msg;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0.0 && secs > budget) {
    ok = false;
    detail += " [runtime budget exceeded]";
  }
  g_results.push_back({id, label, ok, secs, budget, detail});
  char budget_note[32] = "";
  if (budget > 0.0)
    std::snprintf(budget_note, sizeof(budget_note), " / budget %gs", budget);
  std::printf("[%s] criterion %2d: %-52s (%.2fs%s) %s\n", ok ? "PASS" : "FAIL", id,
              label.c_str(), secs, budget_note, detail.c_str());
  std::fflush(stdout);
}

std::pair<bool, std::string> from_check(const CheckResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "measured %.3g vs threshold %.3g", r.measured,
                r.threshold);
  return {r.passed, buf};
}

std::pair<bool, std::string> from_checks(const std::vector<CheckResult>& rs) {
  bool ok = true;
  double worst_ratio = 0.0;
  std::string worst;
  for (const auto& r : rs) {
    ok = ok && r.passed;
    const double ratio = r.threshold > 0 ? r.measured / r.threshold : r.measured;
    if (ratio >= worst_ratio) {
      worst_ratio = ratio;
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s: measured %.3g vs %.3g", r.name.c_str(),
                    r.measured, r.threshold);
      worst = buf;
    }
  }
  return {ok, worst};
}

} // namespace

int main() {
  const std::uint64_t seed = 12345;

  run(1, "printed-table exactness (incl. Scarf II low orders)", 1.0, [&] {
    return from_checks({checks::printed_tables(), checks::scarf2_low_order(seed)});
  });

  run(2, "Romanovski ODE identity, 50 random triples", 5.0,
      [&] { return from_check(checks::romanovski_ode(seed)); });

  run(3, "oracle equivalence: master formula vs Rodrigues", 2.0, [&] {
    return from_checks({checks::master_oracle(), checks::master_realness()});
  });

  run(4, "classical orthogonality, seven families, nmax=6", 30.0,
      [&] { return from_check(checks::classical_gram()); });

  run(5, "finite Romanovski orthogonality and its boundary", 20.0,
      [&] { return from_check(checks::romanovski_finite_orthogonality()); });

  run(6, "closed-form normalization constants vs quadrature", 0.0,
      [&] { return from_check(checks::norm_closed_forms()); });

  run(7, "Scarf II spectrum, residuals, cross-orthogonality", 10.0, [&] {
    auto a = checks::scarf2_spectrum();
    auto b = checks::scarf2_orthogonality();
    // residual sub-criterion on 21-point grids for n <= 3
    CheckResult c{"potentials", "scarf2_residuals", false, 0, 1e-8, 0, ""};
    for (unsigned n = 0; n <= 3; ++n) {
      const WaveFunction wf = scarf2_wavefunction(10.0, 5.0, n);
      const auto xs = linspace(wf.domain_lo, wf.domain_hi, 21);
      for (const double v : schrodinger_residual(wf, xs))
        c.measured = std::max(c.measured, v);
    }
    c.passed = c.measured <= c.threshold;
    return from_checks({a, b, c});
  });

  run(8, "complex-Jacobi identity by terminating series", 0.0,
      [&] { return from_check(checks::complex_jacobi_identity()); });

  run(9, "Legendre relation and infinite orthogonality", 0.0, [&] {
    return from_checks(
        {checks::legendre_relation(), checks::infinite_orthogonality()});
  });

  run(10, "Bessel unit-circle contour orthogonality", 0.0,
      [&] { return from_check(checks::bessel_contour()); });

  run(11, "SUSY ground-state cross-check", 0.0,
      [&] { return from_check(checks::susy_ground_state()); });

  run(12, "Klein-Gordon plug-back consistency", 0.0,
      [&] { return from_check(checks::klein_gordon_plugback()); });

  run(13, "Rosen-Morse and hydrogen/oscillator pipelines", 0.0, [&] {
    return from_checks({checks::spectrum_anchors(), checks::pipeline_residuals(),
                        checks::rosen_morse2_parameters(),
                        checks::rosen_morse1_orthogonality(),
                        checks::bound_state_counts()});
  });

  run(14, "full verification suite under 120 s", 120.0, [&] {
    CheckOptions opt;
    opt.seed = seed;
    const auto results = run_checks("all", opt);
    int failed = 0;
    for (const auto& r : results)
      if (!r.passed) ++failed;
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%zu checks, %d failed", results.size(), failed);
    return std::pair<bool, std::string>{failed == 0, buf};
  });

  int failures = 0;
  for (const auto& c : g_results)
    if (!c.passed) ++failures;
  std::printf("%s: %zu criteria, %d failed\n", failures ? "FAIL" : "PASS",
              g_results.size(), failures);
  return failures ? 1 : 0;
}
