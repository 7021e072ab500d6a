#ifndef ROMPOLY_CHECKS_HPP
#define ROMPOLY_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rompoly {

// One verified invariant: passed iff measured <= threshold.
struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = 12345;
};

// Suites: poly, quad, potentials, angular; "all" runs every one.
std::vector<CheckResult> run_checks(const std::string& suite,
                                    const CheckOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

// Individual checks, exposed for the acceptance gate. Each returns a
// result whose `measured`/`threshold` pin the stated tolerance.
namespace checks {

CheckResult ring_axioms(std::uint64_t seed);
CheckResult product_rule(std::uint64_t seed);
CheckResult eval_consistency(std::uint64_t seed);
CheckResult printed_tables();
CheckResult scarf2_low_order(std::uint64_t seed);
CheckResult romanovski_ode(std::uint64_t seed);
CheckResult family_ode_exact(std::uint64_t seed);
CheckResult rodrigues_degree(std::uint64_t seed);
CheckResult family_parity(std::uint64_t seed);
CheckResult pearson_roundtrip();
CheckResult pearson_log_derivative();
CheckResult classify_scaling(std::uint64_t seed);
CheckResult master_oracle();
CheckResult master_realness();
CheckResult complex_jacobi_identity();

CheckResult quad_selftest();
CheckResult gamma_accuracy();
CheckResult classical_gram();
CheckResult romanovski_finite_orthogonality();
CheckResult norm_closed_forms();
CheckResult bessel_contour();

CheckResult scarf2_spectrum();
CheckResult bound_state_counts();
CheckResult pipeline_residuals();
CheckResult scarf2_orthogonality();
CheckResult rosen_morse1_orthogonality();
CheckResult susy_ground_state();
CheckResult klein_gordon_plugback();
CheckResult rosen_morse2_parameters();
CheckResult spectrum_anchors();

CheckResult theta_map_identities();
CheckResult legendre_relation();
CheckResult infinite_orthogonality();
CheckResult z_function_grid();
CheckResult su11_bookkeeping();
CheckResult solve_parameter_branches();

} // namespace checks

} // namespace rompoly

#endif
