#include "qwalk/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/localization.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/symmetry.hpp"
#include "qwalk/validation.hpp"
#include "qwalk/walk1d.hpp"
#include "qwalk/walk2d.hpp"

namespace qwalk {

namespace {

std::string g17(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty()) throw InvalidParameter("malformed complex number '" + whole + "'");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InvalidParameter("malformed complex number '" + whole + "'");
  }
  return v;
}

bool is_sign(char c) { return c == '+' || c == '-'; }

}  // namespace

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw InvalidParameter("empty complex component");
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) throw InvalidParameter("spaces are not allowed in '" + text + "'");
  }
  if (text.back() != 'i') return {parse_real(text, text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that does not follow an exponent marker.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (is_sign(body[i]) && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  else if (im == "-") im = "-1";
  if (im.size() > 1 && is_sign(im[0]) && is_sign(im[1])) throw InvalidParameter("malformed complex number '" + text + "'");
  return {re.empty() ? 0.0 : parse_real(re, text), parse_real(im, text)};
}

std::vector<Complex> parse_components(const std::string& text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma - start);
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || end != item.c_str() + item.size() || errno == ERANGE || v < INT32_MIN || v > INT32_MAX) {
      throw InvalidParameter("malformed integer '" + item + "' in list '" + text + "'");
    }
    out.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Complex> normalize_components(const std::vector<Complex>& c, std::ostream& warn) {
  double norm2 = 0.0;
  for (const Complex& z : c) norm2 += std::norm(z);
  const double dev = std::abs(norm2 - 1.0);
  if (!(dev <= 1e-4)) throw InvalidState("state is not normalized: sum |c|^2 = " + g17(norm2));
  if (dev > 1e-9) warn << "warning: state renormalized (sum |c|^2 = " << g17(norm2) << ")\n";
  std::vector<Complex> out = c;
  const double s = 1.0 / std::sqrt(norm2);
  for (Complex& z : out) z *= s;
  return out;
}

std::string format_complex(Complex z) {
  std::string s = g17(z.real());
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  if (im == 0.0) return s;
  const std::string is = g17(im);
  return s + (is[0] == '-' ? "" : "+") + is + "i";
}

namespace {

struct RunConfig {
  double p = 0.5;
  std::string state;
  double k = 0.0;
  int t = 0;
  int alpha = 1;
  int beta = 0;
  int grid = 0;
  std::string ladder;
  std::string site = "0";
  int dim = 1;
  double epsilon = kDefaultLocalizationThreshold;
  bool table = false;
  bool quick = false;
  std::string only;
  std::string output;
  std::string format = "csv";
};

struct Prepared {
  CoinParameter p;
  std::vector<Complex> components;
};

std::string state_text(const std::vector<Complex>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + format_complex(c[i]);
  return s;
}

std::string state_json(const std::vector<Complex>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    s += (i ? ",[" : "[") + g17(c[i].real()) + "," + g17(c[i].imag()) + "]";
  }
  return s + "]";
}

Prepared prepare(const RunConfig& cfg, std::size_t components, std::ostream& err) {
  CoinParameter p(cfg.p);
  if (cfg.state.empty()) throw InvalidParameter("--state is required");
  std::vector<Complex> c = parse_components(cfg.state);
  if (c.size() != components) {
    throw InvalidParameter("--state needs " + std::to_string(components) + " components, got " +
                           std::to_string(c.size()));
  }
  return {p, normalize_components(c, err)};
}

QubitState qubit(const std::vector<Complex>& c) { return QubitState::normalized(c[0], c[1]); }
QuditState qudit(const std::vector<Complex>& c) { return QuditState::normalized(Spinor4(c[0], c[1], c[2], c[3])); }

void check_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") throw InvalidParameter("--format must be csv or json");
}

void check_grid(int n) {
  if (n < 64 || n > 65536 || (n & (n - 1)) != 0) {
    throw InvalidParameter("--grid must be a power of two in [64, 65536], got " + std::to_string(n));
  }
}

std::string header_lines(const char* model, const char* convention, const Prepared& pr, int t) {
  std::string s;
  s += std::string("# model=") + model + "\n";
  s += "# p=" + g17(pr.p.p()) + "\n";
  s += "# t=" + std::to_string(t) + "\n";
  s += "# state=" + state_text(pr.components) + "\n";
  s += std::string("# convention=") + convention + "\n";
  s += std::string("# version=") + kArtifactVersion + "\n";
  return s;
}

std::string header_json(const char* model, const char* convention, const Prepared& pr, int t) {
  return std::string("{\"model\":\"") + model + "\",\"p\":" + g17(pr.p.p()) + ",\"t\":" + std::to_string(t) +
         ",\"state\":" + state_json(pr.components) + ",\"convention\":\"" + convention + "\",\"version\":\"" +
         kArtifactVersion + "\"";
}

constexpr const char* kConvention1D = "diffEq-3.2";
constexpr const char* kConvention2D = "diffEq-3.4";

std::string cmd_sim1d(const RunConfig& cfg, std::ostream& err) {
  check_format(cfg);
  const Prepared pr = prepare(cfg, 2, err);
  if (cfg.t < 1 || cfg.t > 1000000) throw InvalidParameter("--t must lie in [1, 1000000]");
  const Wavenumber k(cfg.k);
  const Distribution1D d = distribution_1d(evolve_1d(qubit(pr.components), pr.p, {k.value()}, cfg.t));
  const double m1 = moment_1d(d, 1), m2 = moment_1d(d, 2);
  std::string s;
  if (cfg.format == "csv") {
    s = header_lines("walk1d", kConvention1D, pr, cfg.t);
    s += "# k=" + g17(k.value()) + "\n";
    s += "x,probability\n";
    for (const SiteMass1D& m : d.masses) s += std::to_string(m.x) + "," + g17(m.probability) + "\n";
    s += "# moment alpha=1 value=" + g17(m1) + "\n";
    s += "# moment alpha=2 value=" + g17(m2) + "\n";
  } else {
    s = header_json("walk1d", kConvention1D, pr, cfg.t);
    s += ",\"k\":" + g17(k.value()) + ",\"masses\":[";
    for (std::size_t i = 0; i < d.masses.size(); ++i) {
      s += (i ? "," : "") + std::string("{\"x\":") + std::to_string(d.masses[i].x) +
           ",\"probability\":" + g17(d.masses[i].probability) + "}";
    }
    s += "],\"moments\":[{\"alpha\":1,\"value\":" + g17(m1) + "},{\"alpha\":2,\"value\":" + g17(m2) + "}]}\n";
  }
  return s;
}

const std::pair<int, int> kMoments2D[] = {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}};

std::string cmd_sim2d(const RunConfig& cfg, std::ostream& err) {
  check_format(cfg);
  const Prepared pr = prepare(cfg, 4, err);
  if (cfg.t < 1 || cfg.t > 2000) throw InvalidParameter("--t must lie in [1, 2000]");
  const Wavenumber k(cfg.k);
  const Distribution2D d = distribution_2d(evolve_2d(qudit(pr.components), pr.p, {k.value()}, cfg.t));
  std::string s;
  if (cfg.format == "csv") {
    s = header_lines("walk2d", kConvention2D, pr, cfg.t);
    s += "# k=" + g17(k.value()) + "\n";
    s += "x,y,probability\n";
    for (const SiteMass2D& m : d.masses) {
      s += std::to_string(m.x) + "," + std::to_string(m.y) + "," + g17(m.probability) + "\n";
    }
    for (const auto& [a, b] : kMoments2D) {
      s += "# moment alpha=" + std::to_string(a) + " beta=" + std::to_string(b) +
           " value=" + g17(joint_moment_2d(d, a, b)) + "\n";
    }
  } else {
    s = header_json("walk2d", kConvention2D, pr, cfg.t);
    s += ",\"k\":" + g17(k.value()) + ",\"masses\":[";
    for (std::size_t i = 0; i < d.masses.size(); ++i) {
      const SiteMass2D& m = d.masses[i];
      s += (i ? "," : "") + std::string("{\"x\":") + std::to_string(m.x) + ",\"y\":" + std::to_string(m.y) +
           ",\"probability\":" + g17(m.probability) + "}";
    }
    s += "],\"moments\":[";
    bool first = true;
    for (const auto& [a, b] : kMoments2D) {
      s += (first ? "" : ",") + std::string("{\"alpha\":") + std::to_string(a) + ",\"beta\":" + std::to_string(b) +
           ",\"value\":" + g17(joint_moment_2d(d, a, b)) + "}";
      first = false;
    }
    s += "]}\n";
  }
  return s;
}

std::string report_text(const RunConfig& cfg, const char* model, const char* convention, const Prepared& pr,
                        const MomentReport& r, int grid, bool two_d) {
  const int t = r.times.back();
  std::string s;
  if (cfg.format == "csv") {
    s = header_lines(model, convention, pr, t);
    s += "# grid=" + std::to_string(grid) + "\n";
    s += "# alpha=" + std::to_string(r.alpha) + "\n";
    if (two_d) s += "# beta=" + std::to_string(r.beta) + "\n";
    s += "# limit=" + g17(r.limit) + "\n";
    s += "t,simulated,gap\n";
    for (std::size_t i = 0; i < r.times.size(); ++i) {
      s += std::to_string(r.times[i]) + "," + g17(r.simulated[i]) + "," + g17(r.gaps[i]) + "\n";
    }
    s += std::string("# converging=") + (r.converging() ? "true" : "false") + "\n";
  } else {
    s = header_json(model, convention, pr, t);
    s += ",\"grid\":" + std::to_string(grid) + ",\"alpha\":" + std::to_string(r.alpha);
    if (two_d) s += ",\"beta\":" + std::to_string(r.beta);
    s += ",\"limit\":" + g17(r.limit) + ",\"ladder\":[";
    for (std::size_t i = 0; i < r.times.size(); ++i) {
      s += (i ? "," : "") + std::string("{\"t\":") + std::to_string(r.times[i]) + ",\"simulated\":" +
           g17(r.simulated[i]) + ",\"gap\":" + g17(r.gaps[i]) + "}";
    }
    s += std::string("],\"converging\":") + (r.converging() ? "true" : "false") + "}\n";
  }
  return s;
}

std::vector<int> ladder_or(const std::string& text, std::vector<int> fallback) {
  return text.empty() ? fallback : parse_int_list(text);
}

std::string cmd_limit1d(const RunConfig& cfg, std::ostream& err, bool& converging) {
  check_format(cfg);
  const Prepared pr = prepare(cfg, 2, err);
  if (cfg.alpha < 1) throw InvalidParameter("--alpha must be >= 1");
  const int n = cfg.grid == 0 ? 4096 : cfg.grid;
  check_grid(n);
  const std::vector<int> ladder = ladder_or(cfg.ladder, {125, 250, 500, 1000});
  const MomentReport r = convergence_report_1d(qubit(pr.components), pr.p, cfg.alpha, ladder, QuadratureGrid(n));
  converging = r.converging();
  return report_text(cfg, "limit1d", kConvention1D, pr, r, n, false);
}

std::string cmd_limit2d(const RunConfig& cfg, std::ostream& err, bool& converging) {
  check_format(cfg);
  const Prepared pr = prepare(cfg, 4, err);
  if (cfg.alpha < 0 || cfg.beta < 0 || cfg.alpha + cfg.beta < 1) {
    throw InvalidParameter("--alpha and --beta must be >= 0 with alpha + beta >= 1");
  }
  const int n = cfg.grid == 0 ? 512 : cfg.grid;
  check_grid(n);
  const std::vector<int> ladder = ladder_or(cfg.ladder, {75, 150, 300});
  if (ladder.back() > 2000) throw InvalidParameter("--ladder entries must be <= 2000 in 2D");
  const MomentReport r =
      convergence_report_2d(qudit(pr.components), pr.p, cfg.alpha, cfg.beta, ladder, QuadratureGrid(n));
  converging = r.converging();
  return report_text(cfg, "limit2d", kConvention2D, pr, r, n, true);
}

const char* yes(bool b) { return b ? "true" : "false"; }

std::string cmd_symmetry(const RunConfig& cfg, std::ostream& err) {
  const CoinParameter p(cfg.p);
  const int horizon = cfg.t == 0 ? (cfg.table ? 10 : 50) : cfg.t;
  if (horizon < 1 || horizon > 5000) throw InvalidParameter("--t must lie in [1, 5000]");
  std::string s = "# p=" + g17(p.p()) + "\n# t=" + std::to_string(horizon) + "\n";
  if (cfg.table) {
    if (horizon < 2) throw InvalidParameter("--table needs --t >= 2");
    const ABTable table = extract_ab(p, horizon);
    for (int t = 1; t <= horizon; ++t) {
      s += "t=" + std::to_string(t) + " a=" + g17(table.a_at(t)) + " b=" + g17(table.b_at(t)) + "\n";
    }
    if (p.p() == 0.5) {
      const ABTable ref = reference_ab_table();
      const double dev = max_table_deviation(table, ref);
      const bool covered = horizon >= ref.horizon();
      s += "reference_deviation=" + g17(dev) + "\n";
      s += std::string("reference=") + (covered && dev <= 1e-12 ? "PASS" : "FAIL") + "\n";
    }
    s += std::string("kns=") + (kns_check(table) ? "PASS" : "FAIL") + "\n";
  }
  if (!cfg.state.empty()) {
    const std::vector<Complex> c = parse_components(cfg.state);
    if (c.size() == 2) {
      const std::vector<Complex> n = normalize_components(c, err);
      const QubitState theta = qubit(n);
      s += "# state=" + state_text(n) + "\n";
      const SymmetryVerdict1D v = classify_1d(theta, p, horizon);
      s += std::string("phi_perp=") + yes(v.in_phi_perp) + "\n";
      s += std::string("symmetric=") + yes(v.empirically_symmetric) + "\n";
      s += std::string("zero_mean=") + yes(v.zero_mean) + "\n";
      const std::vector<double> e = expectation_series(theta, p, horizon);
      for (int t = 1; t <= horizon; ++t) s += "expectation t=" + std::to_string(t) + " value=" + g17(e[t - 1]) + "\n";
    } else if (c.size() == 4) {
      const std::vector<Complex> n = normalize_components(c, err);
      const QuditState theta = qudit(n);
      s += "# state=" + state_text(n) + "\n";
      s += std::string("phi_perp=") + yes(in_phi_perp_2d(theta)) + "\n";
      s += std::string("symmetric=") + yes(empirical_symmetric_2d(theta, p, std::min(horizon, 500))) + "\n";
    } else {
      throw InvalidParameter("--state needs 2 or 4 components");
    }
  } else if (!cfg.table) {
    throw InvalidParameter("symmetry needs --state or --table");
  }
  return s;
}

std::string cmd_localize(const RunConfig& cfg, std::ostream& err) {
  if (cfg.dim != 1 && cfg.dim != 2) throw InvalidParameter("--dim must be 1 or 2");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0)) throw InvalidParameter("--epsilon must lie in (0, 1]");
  const Prepared pr = prepare(cfg, cfg.dim == 1 ? 2 : 4, err);
  const std::vector<int> site = parse_int_list(cfg.site);
  if (site.size() != static_cast<std::size_t>(cfg.dim)) {
    throw InvalidParameter("--site needs " + std::to_string(cfg.dim) + " coordinate(s)");
  }
  const std::vector<int> ladder =
      ladder_or(cfg.ladder, cfg.dim == 1 ? std::vector<int>{64, 128, 256} : std::vector<int>{32, 64, 128});
  if (cfg.dim == 2 && ladder.back() > 2000) throw InvalidParameter("--ladder entries must be <= 2000 in 2D");
  const DeltaIntensityEstimate e =
      cfg.dim == 1 ? time_averaged_probability_1d(qubit(pr.components), pr.p, site[0], ladder)
                   : time_averaged_probability_2d(qudit(pr.components), pr.p, site[0], site[1], ladder);
  const bool localized = localization_verdict(e, cfg.epsilon);
  std::string s = header_lines(cfg.dim == 1 ? "walk1d" : "walk2d", cfg.dim == 1 ? kConvention1D : kConvention2D, pr,
                               ladder.back());
  s += "dim=" + std::to_string(cfg.dim) + "\n";
  s += "site=" + cfg.site + "\n";
  s += "epsilon=" + g17(cfg.epsilon) + "\n";
  for (std::size_t i = 0; i < e.horizons.size(); ++i) {
    s += "T=" + std::to_string(e.horizons[i]) + " average=" + g17(e.averages[i]) + "\n";
  }
  s += std::string("decaying=") + yes(e.decaying) + "\n";
  s += std::string("verdict=") + (localized ? "LOCALIZED" : "NOT-LOCALIZED") + "\n";
  return s;
}

void add_state_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "coin parameter in (0,1)")->required();
  sub->add_option("--state", cfg.state, "initial state, comma-separated complex components")->required();
}

void add_output_options(CLI::App* sub, RunConfig& cfg, bool formats) {
  sub->add_option("--output", cfg.output, "output file (default stdout)");
  if (formats) sub->add_option("--format", cfg.format, "csv or json");
}

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.output.empty()) {
    out << text;
    out.flush();
    return out ? kExitOk : kExitIoFailure;
  }
  std::ofstream f(cfg.output, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot open output file '" << cfg.output << "'\n";
    return kExitIoFailure;
  }
  f << text;
  f.close();
  if (!f) {
    err << "error: failed writing '" << cfg.output << "'\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Generalized Hadamard quantum walk lab", "qwalk"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kArtifactVersion);

  auto* sim1d = app.add_subcommand("sim1d", "distribution of the line walk at time t");
  add_state_options(sim1d, cfg);
  sim1d->add_option("--t", cfg.t, "time")->required();
  sim1d->add_option("--k", cfg.k, "phase wavenumber in [-pi, pi)");
  add_output_options(sim1d, cfg, true);

  auto* sim2d = app.add_subcommand("sim2d", "distribution of the square-lattice walk at time t");
  add_state_options(sim2d, cfg);
  sim2d->add_option("--t", cfg.t, "time")->required();
  sim2d->add_option("--k", cfg.k, "phase wavenumber in [-pi, pi)");
  add_output_options(sim2d, cfg, true);

  auto* limit1d = app.add_subcommand("limit1d", "weak-limit moment against simulation, line walk");
  add_state_options(limit1d, cfg);
  limit1d->add_option("--alpha", cfg.alpha, "moment order (>= 1)");
  limit1d->add_option("--grid", cfg.grid, "quadrature nodes (default 4096)");
  limit1d->add_option("--ladder", cfg.ladder, "comma-separated times (default 125,250,500,1000)");
  add_output_options(limit1d, cfg, true);

  auto* limit2d = app.add_subcommand("limit2d", "weak-limit joint moment against simulation, square lattice");
  add_state_options(limit2d, cfg);
  limit2d->add_option("--alpha", cfg.alpha, "x moment order");
  limit2d->add_option("--beta", cfg.beta, "y moment order");
  limit2d->add_option("--grid", cfg.grid, "quadrature nodes per axis (default 512)");
  limit2d->add_option("--ladder", cfg.ladder, "comma-separated times (default 75,150,300)");
  add_output_options(limit2d, cfg, true);

  auto* symmetry = app.add_subcommand("symmetry", "symmetry classes, expectation series, a/b table");
  symmetry->add_option("--p", cfg.p, "coin parameter in (0,1)")->required();
  symmetry->add_option("--state", cfg.state, "initial state (2 or 4 components)");
  symmetry->add_option("--t", cfg.t, "horizon (default 50, or 10 with --table)");
  symmetry->add_flag("--table", cfg.table, "print the a/b expectation coefficients");
  add_output_options(symmetry, cfg, false);

  auto* localize = app.add_subcommand("localize", "Cesaro averages at a site");
  localize->add_option("--dim", cfg.dim, "1 or 2");
  add_state_options(localize, cfg);
  localize->add_option("--site", cfg.site, "x or x,y (default origin)");
  localize->add_option("--ladder", cfg.ladder, "comma-separated horizons");
  localize->add_option("--epsilon", cfg.epsilon, "localization threshold");
  add_output_options(localize, cfg, false);

  auto* validate = app.add_subcommand("validate", "run the acceptance suite");
  validate->add_flag("--quick", cfg.quick, "reduced scale");
  validate->add_option("--only", cfg.only, "group name or criterion number");

  std::vector<std::string> argv_store = {"qwalk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  // Defaults that depend on the subcommand.
  if (localize->parsed() && cfg.site == "0" && cfg.dim == 2) cfg.site = "0,0";

  try {
    if (sim1d->parsed()) return emit(cfg, cmd_sim1d(cfg, err), out, err);
    if (sim2d->parsed()) return emit(cfg, cmd_sim2d(cfg, err), out, err);
    if (limit1d->parsed() || limit2d->parsed()) {
      bool converging = true;
      const std::string text = limit1d->parsed() ? cmd_limit1d(cfg, err, converging) : cmd_limit2d(cfg, err, converging);
      const int rc = emit(cfg, text, out, err);
      if (rc != kExitOk) return rc;
      if (!converging) {
        err << "error: gap at the largest time exceeds the gap at the smallest\n";
        return kExitConvergenceFailure;
      }
      return kExitOk;
    }
    if (symmetry->parsed()) return emit(cfg, cmd_symmetry(cfg, err), out, err);
    if (localize->parsed()) return emit(cfg, cmd_localize(cfg, err), out, err);
    if (validate->parsed()) {
      const std::vector<int> which = select_criteria(cfg.only);
      const auto outcomes =
          run_acceptance(which, cfg.quick ? ValidationScale::kQuick : ValidationScale::kFull, out);
      if (all_passed(outcomes)) return kExitOk;
      err << "failed criteria:";
      for (const auto& o : outcomes) {
        if (o.status == CriterionStatus::kFail) err << ' ' << o.number;
      }
      err << '\n';
      return kExitValidationFailure;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const DegenerateSpectrum& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergenceFailure;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace qwalk
