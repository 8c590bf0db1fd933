#include "jc/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "jc/errors.hpp"
#include "jc/evolution.hpp"
#include "jc/parallel.hpp"
#include "jc/reduction.hpp"

namespace jc {

namespace {

using std::numbers::pi;

constexpr double kConservationTolerance = 1e-10;
constexpr double kPurityTolerance = 1e-12;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(value) + "'");
  }
  return out;
}

long parse_long(std::string_view key, std::string_view value) {
  long out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(std::string(key),
                      "expected an integer, got '" + std::string(value) + "'");
  }
  return out;
}

bool is_integer(double x) { return std::floor(x) == x; }

}  // namespace

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::coherent: return "coherent";
    case FieldKind::tophat: return "tophat";
    case FieldKind::fock: return "fock";
  }
  return "?";
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::exact: return "exact";
    case Mode::analytic: return "analytic";
    case Mode::both: return "both";
  }
  return "?";
}

void set_config_field(RunConfig& cfg, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (key == "nbar") {
    cfg.nbar = parse_double(key, value);
  } else if (key == "lambda") {
    cfg.lambda = parse_double(key, value);
  } else if (key == "p_g") {
    cfg.p_g = parse_double(key, value);
  } else if (key == "theta") {
    cfg.theta = parse_double(key, value);
  } else if (key == "phi") {
    cfg.phi = parse_double(key, value);
  } else if (key == "field_kind") {
    if (value == "coherent") {
      cfg.field_kind = FieldKind::coherent;
    } else if (value == "tophat") {
      cfg.field_kind = FieldKind::tophat;
    } else if (value == "fock") {
      cfg.field_kind = FieldKind::fock;
    } else {
      throw ConfigError("field_kind", "expected coherent, tophat or fock");
    }
  } else if (key == "tophat_halfwidth") {
    cfg.tophat_halfwidth = parse_long(key, value);
  } else if (key == "cutoff") {
    if (value == "auto") {
      cfg.cutoff.reset();
    } else {
      const long c = parse_long(key, value);
      if (c < 0) throw ConfigError("cutoff", "must be >= 0 or 'auto'");
      cfg.cutoff = static_cast<std::size_t>(c);
    }
  } else if (key == "t_max_over_tr") {
    cfg.t_max_over_tr = parse_double(key, value);
  } else if (key == "steps") {
    cfg.steps = parse_long(key, value);
  } else if (key == "mode") {
    if (value == "exact") {
      cfg.mode = Mode::exact;
    } else if (value == "analytic") {
      cfg.mode = Mode::analytic;
    } else if (value == "both") {
      cfg.mode = Mode::both;
    } else {
      throw ConfigError("mode", "expected exact, analytic or both");
    }
  } else if (key == "output_path") {
    cfg.output_path = std::string(value);
  } else {
    throw ConfigError(std::string(key), "unknown configuration key");
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    set_config_field(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(cfg, buffer.str());
}

void validate(const RunConfig& cfg) {
  if (!(cfg.nbar > 0.0)) throw ConfigError("nbar", "must be > 0");
  if (!(cfg.lambda > 0.0)) throw ConfigError("lambda", "must be > 0");
  if (!(cfg.p_g >= 0.0 && cfg.p_g <= 1.0)) throw ConfigError("p_g", "must lie in [0, 1]");
  if (cfg.steps < 2) throw ConfigError("steps", "must be >= 2");
  if (!(cfg.t_max_over_tr > 0.0)) throw ConfigError("t_max_over_tr", "must be > 0");
  if (cfg.mode != Mode::exact && cfg.nbar < kAnalyticMinNbar) {
    throw ConfigError("nbar", "closed-form modes need nbar >= 4");
  }
  if (cfg.field_kind != FieldKind::coherent && !is_integer(cfg.nbar)) {
    throw ConfigError("nbar", "must be an integer for tophat and fock fields");
  }
  if (cfg.field_kind == FieldKind::tophat) {
    if (cfg.tophat_halfwidth < 0) throw ConfigError("tophat_halfwidth", "must be >= 0");
    if (cfg.nbar - static_cast<double>(cfg.tophat_halfwidth) < 0.0) {
      throw ConfigError("tophat_halfwidth", "window extends below n = 0");
    }
  }
  if (cfg.cutoff) {
    const double top = cfg.field_kind == FieldKind::tophat
                           ? cfg.nbar + static_cast<double>(cfg.tophat_halfwidth)
                           : cfg.nbar;
    if (cfg.field_kind != FieldKind::coherent && top > static_cast<double>(*cfg.cutoff)) {
      throw ConfigError("cutoff", "smaller than the occupied photon numbers");
    }
  }
}

std::size_t resolved_cutoff(const RunConfig& cfg) {
  if (cfg.cutoff) return *cfg.cutoff;
  std::size_t cutoff = default_cutoff(cfg.nbar);
  if (cfg.field_kind == FieldKind::tophat) {
    cutoff = std::max(cutoff,
                      static_cast<std::size_t>(cfg.nbar) +
                          static_cast<std::size_t>(cfg.tophat_halfwidth) + 1);
  }
  return cutoff;
}

AtomState make_atom(const RunConfig& cfg) { return atom_state(cfg.p_g, cfg.theta); }

FieldState make_field(const RunConfig& cfg) {
  const std::size_t cutoff = resolved_cutoff(cfg);
  switch (cfg.field_kind) {
    case FieldKind::coherent: return coherent_field(cfg.nbar, cfg.phi, cutoff);
    case FieldKind::tophat:
      return tophat_field(static_cast<long>(cfg.nbar), cfg.tophat_halfwidth, cutoff);
    case FieldKind::fock: return fock_field(static_cast<long>(cfg.nbar), cutoff);
  }
  throw ConfigError("field_kind", "unsupported");
}

AnalyticParams make_analytic_params(const RunConfig& cfg) {
  // The closed form always describes a coherent field of the same mean; for
  // coherent runs its phase is folded into theta.
  const double phi = cfg.field_kind == FieldKind::coherent ? cfg.phi : 0.0;
  return AnalyticParams::from_states(make_atom(cfg), cfg.nbar, phi, cfg.lambda);
}

double revival_time(const RunConfig& cfg) { return revival_time(cfg.lambda, cfg.nbar); }

std::vector<double> time_grid(const RunConfig& cfg) {
  const auto count = static_cast<std::size_t>(cfg.steps);
  const double t_max = cfg.t_max_over_tr * revival_time(cfg);
  std::vector<double> times(count);
  for (std::size_t k = 0; k < count; ++k) {
    times[k] = t_max * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  return times;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  validate(cfg);
  const std::vector<double> times = time_grid(cfg);
  const double t_r = revival_time(cfg);
  std::vector<SweepRow> rows(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    rows[k].t = times[k];
    rows[k].t_over_tr = times[k] / t_r;
  }

  if (cfg.mode != Mode::exact) {
    const AnalyticParams params = make_analytic_params(cfg);
    for (auto& row : rows) {
      row.purity_analytic = purity_t1(row.t, params);
      if (cfg.mode == Mode::analytic) {
        const AtomDensity d = analytic_rho(row.t, params);
        row.a = d.a;
        row.re_b = d.b.real();
        row.im_b = d.b.imag();
        row.inversion = inversion(d);
      }
    }
  }

  if (cfg.mode != Mode::analytic) {
    const AtomState atom = make_atom(cfg);
    const FieldState field = make_field(cfg);
    const double excitation0 = excitation_expectation(product_state(atom, field));
    std::vector<std::string> failures(rows.size());

    detail::parallel_for(rows.size(), [&](std::size_t k) {
      SweepRow& row = rows[k];
      const JointState s = evolve(atom, field, cfg.lambda, row.t);
      const double norm = state_norm(s);
      const double excitation = excitation_expectation(s);
      const AtomDensity d = reduce(s);
      const double p = purity(d);
      if (!(std::abs(norm - 1.0) < kConservationTolerance)) {
        failures[k] = "norm " + format_number(norm);
      } else if (!(std::abs(excitation - excitation0) < kConservationTolerance)) {
        failures[k] = "excitation number drifted by " + format_number(excitation - excitation0);
      } else if (!(p >= 0.5 - kPurityTolerance && p <= 1.0 + kPurityTolerance)) {
        failures[k] = "purity " + format_number(p);
      }
      row.purity_exact = p;
      row.a = d.a;
      row.re_b = d.b.real();
      row.im_b = d.b.imag();
      row.inversion = inversion(d);
    });

    for (std::size_t k = 0; k < failures.size(); ++k) {
      if (!failures[k].empty()) {
        throw InvariantViolation("t = " + format_number(rows[k].t) + ": " + failures[k]);
      }
    }
  }
  return rows;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  const auto optional = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
  };
  for (const auto& row : rows) {
    out << format_number(row.t) << ',' << format_number(row.t_over_tr) << ','
        << optional(row.purity_exact) << ',' << optional(row.purity_analytic) << ','
        << format_number(row.a) << ',' << format_number(row.re_b) << ','
        << format_number(row.im_b) << ',' << format_number(row.inversion) << '\n';
  }
}

double fit_transient_rate(const AtomState& atom, const FieldState& field,
                          const AnalyticParams& p, std::size_t samples) {
  const double t_c = p.collapse_time();
  // least squares for ln(env) = c0 - k t^2
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = t_c * static_cast<double>(k) / static_cast<double>(samples - 1);
    const double exact = purity(reduce(evolve(atom, field, p.lambda(), t)));
    const double transient = exact - purity_revival_part(t, p);
    if (!(transient > 0.0)) continue;
    const double x = t * t;
    const double y = std::log(transient);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used < 3) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(used);
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return -slope;
}

EnvelopeFit fit_slow_envelope(const AtomState& atom, const FieldState& field, double lambda,
                              double t_r, std::size_t windows, std::size_t samples_per_window) {
  EnvelopeFit fit;
  for (std::size_t w = 0; w < windows; ++w) {
    const double lo = (static_cast<double>(w) + 0.25) * t_r;
    const double hi = (static_cast<double>(w) + 0.75) * t_r;
    std::vector<double> times(samples_per_window);
    for (std::size_t k = 0; k < samples_per_window; ++k) {
      times[k] = lo + (hi - lo) * static_cast<double>(k) /
                          static_cast<double>(samples_per_window - 1);
    }
    const auto densities = evolve_reduced_grid(atom, field, lambda, times);
    std::size_t best = 0;
    double best_value = -1.0;
    for (std::size_t k = 0; k < densities.size(); ++k) {
      const double p = purity(densities[k]);
      if (p > best_value) {
        best_value = p;
        best = k;
      }
    }
    fit.peak_times.push_back(times[best]);
    fit.peak_values.push_back(best_value);
  }
  // ln(2P - 1) = -w t^2, least squares through the origin
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < fit.peak_times.size(); ++k) {
    const double x = fit.peak_times[k] * fit.peak_times[k];
    num += x * std::log(2.0 * fit.peak_values[k] - 1.0);
    den += x * x;
  }
  fit.rate = -num / den;
  fit.width = 1.0 / std::sqrt(2.0 * fit.rate);
  return fit;
}

double purity_peak_to_trough(const AtomState& atom, const FieldState& field, double lambda,
                             double t0, double t1, std::size_t samples) {
  std::vector<double> times(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    times[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(samples - 1);
  }
  const auto densities = evolve_reduced_grid(atom, field, lambda, times);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& d : densities) {
    const double p = purity(d);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return hi - lo;
}

CompareReport compare_report(const RunConfig& cfg) {
  if (cfg.mode != Mode::both) throw ConfigError("mode", "compare needs mode = both");
  const std::vector<SweepRow> rows = run_sweep(cfg);

  CompareReport report;
  report.samples = rows.size();
  double sum_sq = 0.0;
  for (const auto& row : rows) {
    const double dev = std::abs(*row.purity_exact - *row.purity_analytic);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    sum_sq += dev * dev;
  }
  report.rms_deviation = std::sqrt(sum_sq / static_cast<double>(rows.size()));

  const AtomState atom = make_atom(cfg);
  const FieldState field = make_field(cfg);
  const AnalyticParams params = make_analytic_params(cfg);
  report.transient_rate = fit_transient_rate(atom, field, params);
  const double t_c = params.collapse_time();
  report.transient_rate_expected = 4.0 / (t_c * t_c);
  report.purity_at_half_revival =
      purity(reduce(evolve(atom, field, cfg.lambda, 0.5 * revival_time(cfg))));
  return report;
}

std::vector<FigureRun> figure_runs(int figure) {
  std::vector<FigureRun> runs;
  const auto base = [] {
    RunConfig cfg;
    cfg.p_g = 0.5;
    cfg.mode = Mode::both;
    cfg.steps = 2000;
    return cfg;
  };
  const std::pair<double, const char*> phases[] = {
      {0.0, "0"}, {pi / 4.0, "pi4"}, {pi / 2.0, "pi2"}};

  switch (figure) {
    case 1:
      for (double nbar : {400.0, 16.0}) {
        for (const auto& [theta, label] : phases) {
          RunConfig cfg = base();
          cfg.nbar = nbar;
          cfg.theta = theta;
          cfg.t_max_over_tr = 2.0;
          runs.push_back({"fig1_nbar" + std::to_string(static_cast<int>(nbar)) + "_theta" +
                              label,
                          cfg});
        }
      }
      break;
    case 2:
      // first five collapse times
      for (double nbar : {400.0, 16.0}) {
        RunConfig cfg = base();
        cfg.nbar = nbar;
        cfg.theta = pi / 2.0;
        cfg.t_max_over_tr = 5.0 / (pi * std::sqrt(nbar));
        runs.push_back({"fig2_nbar" + std::to_string(static_cast<int>(nbar)) + "_thetapi2",
                        cfg});
      }
      break;
    case 3:
      for (long d : {10L, 20L, 30L, 80L}) {
        RunConfig cfg = base();
        cfg.nbar = 400.0;
        cfg.field_kind = FieldKind::tophat;
        cfg.tophat_halfwidth = d;
        cfg.t_max_over_tr = 2.0;
        runs.push_back({"fig3_nbar400_D" + std::to_string(d), cfg});
      }
      break;
    default: throw ConfigError("figure", "expected 1, 2 or 3");
  }
  return runs;
}

}  // namespace jc
