// rompoly: polynomial families of the generalized hypergeometric equation,
// their orthogonality, and the exactly solvable potential catalog built on
// them. Emits CSV/JSON tables; `rompoly check` runs the verification suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "rompoly/angular.hpp"
#include "rompoly/checks.hpp"
#include "rompoly/errors.hpp"
#include "rompoly/masterformula.hpp"
#include "rompoly/potentials.hpp"
#include "rompoly/quad.hpp"
#include "rompoly/report.hpp"

namespace {

using namespace rompoly;

constexpr const char* kVersion = "1.0.0";

struct GlobalOpts {
  std::string format = "json"; // csv | json (poly also accepts latex)
  std::string out;             // empty = stdout
  double tol = 1e-12;          // absolute quadrature tolerance
  double rel_tol = 1e-10;      // relative quadrature tolerance
  std::uint64_t seed = 12345;
};

void emit(const OutputRecord& rec, const GlobalOpts& g, const std::string& fmt) {
  std::string text;
  if (fmt == "json") text = rec.to_json();
  else text = rec.to_csv();
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(g.out, std::ios::binary);
    if (!os) throw DomainError("cannot open output file " + g.out);
    os << text;
  }
}

Json meta_base(const std::string& command, const GlobalOpts& g) {
  Json meta = Json::object();
  meta["command"] = command;
  meta["version"] = kVersion;
  meta["units"] = "hbar = 2*mass = 1 (dimensionless)";
  meta["format"] = g.format;
  return meta;
}

// "a=10,b=5,alpha=1" -> ordered key/value map, values kept as strings
std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  if (text.empty()) return kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw DomainError("malformed parameter '" + item + "' (expected key=value)");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

double kv_double(const std::map<std::string, std::string>& kv,
                 const std::string& key, std::optional<double> fallback = {}) {
  const auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw DomainError("missing parameter '" + key + "'");
  }
  try {
    if (it->second.find('/') != std::string::npos)
      return Rational::parse(it->second).to_double();
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw DomainError("cannot parse parameter '" + key + "=" + it->second + "'");
  }
}

// Rational when the literal is exact ("3/2", "-4"); nullopt for decimals.
std::optional<Rational> kv_rational(const std::map<std::string, std::string>& kv,
                                    const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) return std::nullopt;
  try {
    return Rational::parse(it->second);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// "lo:hi:count"
struct GridSpec {
  double lo, hi;
  unsigned count;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g{};
  std::stringstream ss(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw DomainError("grid must be lo:hi:count");
  g.lo = std::stod(parts[0]);
  g.hi = std::stod(parts[1]);
  const long c = std::stol(parts[2]);
  if (c < 1) throw DomainError("grid count must be positive");
  g.count = static_cast<unsigned>(c);
  return g;
}

// "0..4" or "3"
std::pair<unsigned, unsigned> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned n = static_cast<unsigned>(std::stoul(text));
    return {n, n};
  }
  const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
  const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
  if (hi < lo) throw DomainError("empty n range");
  return {lo, hi};
}

std::string poly_latex(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeff(k);
    if (c.is_zero()) continue;
    const Rational ab = c.abs();
    if (first) {
      if (c < Rational(0)) os << "-";
      first = false;
    } else {
      os << (c < Rational(0) ? " - " : " + ");
    }
    const bool unit = ab == Rational(1) && k > 0;
    if (!unit) {
      if (ab.is_integer()) os << ab.num();
      else os << "\\frac{" << ab.num() << "}{" << ab.den() << "}";
    }
    if (k == 1) os << "x";
    else if (k > 1) os << "x^{" << k << "}";
  }
  return os.str();
}

FamilySpec family_from_cli(const std::string& family,
                           const std::map<std::string, std::string>& kv) {
  auto need = [&](const std::string& key) -> Rational {
    const auto r = kv_rational(kv, key);
    if (!r)
      throw DomainError("family '" + family + "' needs exact rational parameter '" +
                        key + "'");
    return *r;
  };
  if (family == "hermite") return FamilySpec::hermite();
  if (family == "laguerre") return FamilySpec::laguerre(need("beta"));
  if (family == "jacobi") return FamilySpec::jacobi(need("alpha"), need("beta"));
  if (family == "bessel") return FamilySpec::bessel(need("alpha"), need("beta"));
  if (family == "romanovski") return FamilySpec::romanovski(need("p"), need("q"));
  if (family == "legendre") return FamilySpec::legendre();
  if (family == "chebyshev1") return FamilySpec::chebyshev1();
  if (family == "chebyshev2") return FamilySpec::chebyshev2();
  if (family == "gegenbauer") return FamilySpec::gegenbauer(need("alpha"));
  throw DomainError("unknown family '" + family + "'");
}

PotentialSpec potential_from_cli(const std::string& name,
                                 const std::map<std::string, std::string>& kv) {
  if (name == "oscillator1d")
    return PotentialSpec::oscillator1d(kv_double(kv, "omega", 2.0),
                                       kv_double(kv, "shift", 0.0));
  if (name == "oscillator3d")
    return PotentialSpec::oscillator3d(static_cast<int>(kv_double(kv, "l", 0.0)));
  if (name == "coulomb")
    return PotentialSpec::coulomb(kv_double(kv, "Z", 1.0),
                                  static_cast<int>(kv_double(kv, "l", 0.0)));
  if (name == "morse")
    return PotentialSpec::morse(kv_double(kv, "A"), kv_double(kv, "B"),
                                kv_double(kv, "alpha", 1.0));
  if (name == "scarf2")
    return PotentialSpec::scarf2(kv_double(kv, "a"), kv_double(kv, "b"),
                                 kv_double(kv, "alpha", 1.0));
  if (name == "rosen_morse2")
    return PotentialSpec::rosen_morse2(kv_double(kv, "a"), kv_double(kv, "b"));
  if (name == "eckart")
    return PotentialSpec::eckart(kv_double(kv, "A"), kv_double(kv, "B"),
                                 kv_double(kv, "alpha", 1.0));
  if (name == "scarf1")
    return PotentialSpec::scarf1(kv_double(kv, "a"), kv_double(kv, "b"),
                                 kv_double(kv, "alpha", 1.0));
  if (name == "poschl_teller2")
    return PotentialSpec::poschl_teller2(kv_double(kv, "A"), kv_double(kv, "B"),
                                         kv_double(kv, "alpha", 1.0));
  if (name == "rosen_morse1")
    return PotentialSpec::rosen_morse1(static_cast<int>(kv_double(kv, "l", 0.0)),
                                       kv_double(kv, "b"));
  if (name == "exp_barrier")
    return PotentialSpec::exp_barrier(kv_double(kv, "A"), kv_double(kv, "rate"));
  throw DomainError("unknown potential '" + name + "'");
}

int cmd_classify(const GlobalOpts& g, const std::string& a, const std::string& b,
                 const std::string& c, const std::string& d, const std::string& e) {
  const HyperParams hp{Rational::parse(a), Rational::parse(b), Rational::parse(c),
                       Rational::parse(d), Rational::parse(e)};
  const BochnerClass cls = classify(hp);
  const WeightSpec ws = pearson_weight(hp);
  const HyperParams canon = canonicalize(ws);

  OutputRecord rec;
  rec.kind = "checkReport";
  rec.meta = meta_base("classify", g);
  rec.meta["parameters"] =
      Json{{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}};
  rec.columns = {"class", "family", "weight", "canonical_a", "canonical_b",
                 "canonical_c", "canonical_d", "canonical_e", "param1", "param2"};
  rec.rows.push_back({to_string(cls), to_string(ws.family()), ws.str(),
                      canon.a.str(), canon.b.str(), canon.c.str(), canon.d.str(),
                      canon.e.str(), ws.param1().str(), ws.param2().str()});
  emit(rec, g, g.format);
  return 0;
}

int cmd_poly(const GlobalOpts& g, const std::string& family,
             const std::string& params, const std::string& n_range,
             const std::string& fmt) {
  const auto kv = parse_kv(params);
  const auto [lo, hi] = parse_n_range(n_range);

  OutputRecord rec;
  rec.kind = "polyTable";
  rec.meta = meta_base("poly", g);
  rec.meta["family"] = family;
  rec.meta["parameters"] = params;
  rec.columns = {"n", "coefficients", "polynomial"};

  bool exact = true;
  try {
    family_from_cli(family, kv);
  } catch (const DomainError&) {
    exact = false;
  }

  if (exact) {
    const FamilySpec fs = family_from_cli(family, kv);
    for (unsigned n = lo; n <= hi; ++n) {
      const RationalPoly p = family_poly(fs, n);
      Json coeffs = Json::array();
      for (const auto& cf : p.coeffs()) coeffs.push_back(cf.str());
      rec.rows.push_back(
          {Json(n), coeffs, fmt == "latex" ? poly_latex(p) : p.str()});
    }
  } else if (family == "romanovski" || family == "jacobi" ||
             family == "laguerre") {
    // decimal parameters: float construction path
    std::cerr << "warning: non-rational parameters; emitting float coefficients\n";
    for (unsigned n = lo; n <= hi; ++n) {
      DoublePoly p;
      if (family == "romanovski")
        p = romanovski_poly_d(kv_double(kv, "p"), kv_double(kv, "q"), n);
      else if (family == "laguerre")
        p = laguerre_poly_d(kv_double(kv, "beta"), n);
      else
        p = jacobi_poly_d(kv_double(kv, "alpha"), kv_double(kv, "beta"), n);
      Json coeffs = Json::array();
      for (const double cf : p.coeffs()) coeffs.push_back(cf);
      rec.rows.push_back({Json(n), coeffs, p.str()});
    }
  } else {
    throw DomainError("family '" + family + "' requires exact rational parameters");
  }
  emit(rec, g, fmt == "latex" ? "json" : fmt);
  return 0;
}

int cmd_gram(const GlobalOpts& g, const std::string& family,
             const std::string& params, unsigned nmax, double tol) {
  const FamilySpec fs = family_from_cli(family, parse_kv(params));
  QuadOptions opt;
  opt.abs_tol = tol;
  opt.rel_tol = g.rel_tol;
  const GramReport rep = gram_matrix(fs, nmax, tol, opt);

  OutputRecord rec;
  rec.kind = "gram";
  rec.meta = meta_base("gram", g);
  rec.meta["family"] = family;
  rec.meta["parameters"] = params;
  rec.meta["nmax"] = nmax;
  rec.meta["tol"] = tol;
  rec.columns = {"n", "m", "value", "error", "converged", "admissible"};
  for (unsigned n = 0; n <= nmax; ++n)
    for (unsigned m = 0; m <= nmax; ++m) {
      const auto& q = rep.matrix[n][m];
      rec.rows.push_back({Json(n), Json(m), Json(q.value), Json(q.error_estimate),
                          Json(q.converged), Json(static_cast<bool>(rep.admissible[n][m]))});
    }
  emit(rec, g, g.format);
  return 0;
}

int cmd_spectrum(const GlobalOpts& g, const std::string& potential,
                 const std::string& params, unsigned nmax) {
  const PotentialSpec ps = potential_from_cli(potential, parse_kv(params));
  const auto sp = spectrum(ps, nmax);

  OutputRecord rec;
  rec.kind = "spectrum";
  rec.meta = meta_base("spectrum", g);
  rec.meta["potential"] = potential;
  rec.meta["parameters"] = params;
  rec.columns = {"n", "energy", "energy_alt"};
  for (const auto& ent : sp) {
    Json alt;
    if (ent.energy_alt) alt = *ent.energy_alt;
    rec.rows.push_back({Json(ent.n), Json(ent.energy), alt});
  }
  emit(rec, g, g.format);
  return 0;
}

int cmd_wavefunction(const GlobalOpts& g, const std::string& potential,
                     const std::string& params, unsigned n,
                     const std::string& grid) {
  const PotentialSpec ps = potential_from_cli(potential, parse_kv(params));
  const WaveFunction wf = make_wavefunction(ps, n);
  GridSpec gs = parse_grid(grid);
  // hard domain boundaries are open: clamp like the angular command
  double lo_min = -std::numeric_limits<double>::infinity();
  double hi_max = std::numeric_limits<double>::infinity();
  switch (ps.kind) {
  case PotentialKind::RosenMorseI:
    lo_min = 1e-6;
    hi_max = 3.141592653589793 - 1e-6;
    break;
  case PotentialKind::Oscillator3D:
  case PotentialKind::Coulomb:
    lo_min = 1e-6;
    break;
  default:
    break;
  }
  if (gs.lo < lo_min || gs.hi > hi_max) {
    std::cerr << "warning: grid clamped to the open domain of " << potential
              << "\n";
    gs.lo = std::max(gs.lo, lo_min);
    gs.hi = std::min(gs.hi, hi_max);
  }
  const auto xs = linspace(gs.lo, gs.hi, gs.count);
  const auto residuals = schrodinger_residual(wf, xs);

  OutputRecord rec;
  rec.kind = "grid";
  rec.meta = meta_base("wavefunction", g);
  rec.meta["potential"] = potential;
  rec.meta["parameters"] = params;
  rec.meta["n"] = n;
  rec.meta["energy"] = wf.energy;
  rec.meta["variable"] =
      ps.kind == PotentialKind::ScarfII ? "x = sinh(z)" : "z";
  rec.columns = {"x", "psi", "dpsi", "d2psi", "residual"};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Jet j = wf.eval(xs[i]);
    rec.rows.push_back(
        {Json(xs[i]), Json(j.f), Json(j.d1), Json(j.d2), Json(residuals[i])});
  }
  emit(rec, g, g.format);
  return 0;
}

int cmd_angular(const GlobalOpts& g, int l, int m, const std::string& theta_grid,
                double phi, bool compare_spherical, bool normalize) {
  GridSpec gs = parse_grid(theta_grid);
  const double eps_theta = 1e-6;
  const double pi = 3.141592653589793;
  if (gs.lo < eps_theta || gs.hi > pi - eps_theta) {
    std::cerr << "warning: theta grid clamped to the open interval (0, pi)\n";
    gs.lo = std::max(gs.lo, eps_theta);
    gs.hi = std::min(gs.hi, pi - eps_theta);
  }
  const double scale = normalize ? 1.0 / z_function_theta_norm(l, m) : 1.0;

  OutputRecord rec;
  rec.kind = "grid";
  rec.meta = meta_base("angular", g);
  rec.meta["l"] = l;
  rec.meta["m"] = m;
  rec.meta["phi"] = phi;
  rec.meta["normalized"] = normalize;
  rec.columns = {"theta", "z_re", "z_im", "z_abs"};
  const bool do_compare = compare_spherical && std::abs(m) <= l;
  if (do_compare) rec.columns.push_back("y_abs");
  for (const double theta : linspace(gs.lo, gs.hi, gs.count)) {
    const Complex z = scale * z_function(l, m, theta, phi);
    std::vector<Json> row = {Json(theta), Json(z.real()), Json(z.imag()),
                             Json(std::abs(z))};
    if (do_compare) {
      // normalized |Y_l^m|
      const double norm = std::sqrt(
          (2.0 * l + 1.0) / (4.0 * pi) *
          (Rational(factorial(l - std::abs(m))) / Rational(factorial(l + std::abs(m))))
              .to_double());
      row.push_back(Json(std::abs(
          norm * assoc_legendre(l, std::abs(m), std::cos(theta)))));
    }
    rec.rows.push_back(std::move(row));
  }
  emit(rec, g, g.format);
  return 0;
}

int cmd_kg(const GlobalOpts& g, double A, double B, double mu, unsigned n) {
  const KGParams kg{A, B, mu};
  const KGLevel lvl = klein_gordon_energies(kg, n);

  OutputRecord rec;
  rec.kind = "spectrum";
  rec.meta = meta_base("kg", g);
  rec.meta["A"] = A;
  rec.meta["B"] = B;
  rec.meta["mu"] = mu;
  rec.meta["n"] = n;
  rec.columns = {"root", "E", "a", "b", "eps", "residual"};
  for (const auto& [label, E] :
       {std::pair<const char*, double>{"particle", lvl.E1},
        std::pair<const char*, double>{"antiparticle", lvl.E2}}) {
    const KGDerived d = klein_gordon_match(kg, E);
    rec.rows.push_back({Json(label), Json(E), Json(d.a), Json(d.b), Json(d.eps),
                        Json(klein_gordon_residual(kg, n, E))});
  }
  emit(rec, g, g.format);
  return 0;
}

int cmd_check(const GlobalOpts& g, const std::string& suite) {
  CheckOptions opt;
  opt.seed = g.seed;
  const auto results = run_checks(suite, opt);

  OutputRecord rec;
  rec.kind = "checkReport";
  rec.meta = meta_base("check", g);
  rec.meta["suite"] = suite;
  rec.meta["seed"] = g.seed;
  rec.columns = {"suite", "check", "passed", "measured", "threshold", "seconds"};
  for (const auto& r : results)
    rec.rows.push_back({Json(r.suite), Json(r.name), Json(r.passed),
                        Json(r.measured), Json(r.threshold), Json(r.seconds)});
  emit(rec, g, g.format);
  return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial solutions of the generalized hypergeometric equation, "
               "their orthogonality, and exactly solvable potentials"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--tol", g.tol, "absolute tolerance for numeric commands");
  app.add_option("--rel-tol", g.rel_tol, "relative tolerance for numeric commands");
  app.add_option("--seed", g.seed, "seed for randomized property suites");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify (a,b,c,d,e)");
  std::string ca, cb, cc, cd, ce;
  classify_cmd->add_option("--a", ca)->required();
  classify_cmd->add_option("--b", cb)->required();
  classify_cmd->add_option("--c", cc)->required();
  classify_cmd->add_option("--d", cd)->required();
  classify_cmd->add_option("--e", ce)->required();

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "emit polynomial tables");
  std::string pf_family, pf_params, pf_range = "0..4", pf_fmt;
  poly_cmd->add_option("--family", pf_family)->required();
  poly_cmd->add_option("--params", pf_params);
  poly_cmd->add_option("--n", pf_range, "single degree or range lo..hi");
  poly_cmd->add_option("--format", pf_fmt, "csv, json, or latex")
      ->check(CLI::IsMember({"csv", "json", "latex"}));

  // gram
  auto* gram_cmd = app.add_subcommand("gram", "weighted Gram matrix");
  std::string gm_family, gm_params;
  unsigned gm_nmax = 4;
  gram_cmd->add_option("--family", gm_family)->required();
  gram_cmd->add_option("--params", gm_params);
  gram_cmd->add_option("--nmax", gm_nmax);

  // spectrum
  auto* spec_cmd = app.add_subcommand("spectrum", "closed-form levels");
  std::string sp_potential, sp_params;
  unsigned sp_nmax = 5;
  spec_cmd->add_option("--potential", sp_potential)->required();
  spec_cmd->add_option("--params", sp_params);
  spec_cmd->add_option("--nmax", sp_nmax);

  // wavefunction
  auto* wf_cmd = app.add_subcommand("wavefunction", "wavefunction grid");
  std::string wf_potential, wf_params, wf_grid = "-3:3:61";
  unsigned wf_n = 0;
  wf_cmd->add_option("--potential", wf_potential)->required();
  wf_cmd->add_option("--params", wf_params);
  wf_cmd->add_option("--n", wf_n);
  wf_cmd->add_option("--grid", wf_grid, "lo:hi:count");

  // angular
  auto* ang_cmd = app.add_subcommand("angular", "non-spherical angular grid");
  int ang_l = 0, ang_m = 0;
  std::string ang_grid = "0.01:3.13:99";
  double ang_phi = 0.0;
  bool ang_compare = false, ang_normalize = false;
  ang_cmd->add_option("--l", ang_l)->required();
  ang_cmd->add_option("--m", ang_m)->required();
  ang_cmd->add_option("--theta-grid", ang_grid);
  ang_cmd->add_option("--phi", ang_phi);
  ang_cmd->add_flag("--compare-spherical", ang_compare);
  ang_cmd->add_flag("--normalize", ang_normalize, "divide by the theta self-norm");

  // kg
  auto* kg_cmd = app.add_subcommand("kg", "Klein-Gordon equal-potential levels");
  double kg_A = 1.0, kg_B = 1.0, kg_mu = 1.0;
  unsigned kg_n = 0;
  kg_cmd->add_option("--A", kg_A)->required();
  kg_cmd->add_option("--B", kg_B);
  kg_cmd->add_option("--mu", kg_mu)->required();
  kg_cmd->add_option("--n", kg_n);

  // check
  auto* check_cmd = app.add_subcommand("check", "run the verification suites");
  std::string ck_suite = "all";
  check_cmd->add_option("--suite", ck_suite)
      ->check(CLI::IsMember({"all", "poly", "quad", "potentials", "angular"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*classify_cmd) return cmd_classify(g, ca, cb, cc, cd, ce);
    if (*poly_cmd)
      return cmd_poly(g, pf_family, pf_params, pf_range,
                      pf_fmt.empty() ? g.format : pf_fmt);
    if (*gram_cmd) return cmd_gram(g, gm_family, gm_params, gm_nmax, g.tol);
    if (*spec_cmd) return cmd_spectrum(g, sp_potential, sp_params, sp_nmax);
    if (*wf_cmd) return cmd_wavefunction(g, wf_potential, wf_params, wf_n, wf_grid);
    if (*ang_cmd)
      return cmd_angular(g, ang_l, ang_m, ang_grid, ang_phi, ang_compare,
                         ang_normalize);
    if (*kg_cmd) return cmd_kg(g, kg_A, kg_B, kg_mu, kg_n);
    if (*check_cmd) return cmd_check(g, ck_suite);
  } catch (const InvalidEquationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
