#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jc/analytic.hpp"
#include "jc/states.hpp"

namespace jc {

enum class FieldKind { coherent, tophat, fock };
enum class Mode { exact, analytic, both };

/// Everything needed to reproduce one purity time series.
/// Field names double as config-file keys.
struct RunConfig {
  double nbar = 400.0;
  double lambda = 1.0;
  double p_g = 0.5;
  double theta = 0.0;
  double phi = 0.0;
  FieldKind field_kind = FieldKind::coherent;
  long tophat_halfwidth = 0;
  std::optional<std::size_t> cutoff;  // empty = auto
  double t_max_over_tr = 2.0;
  long steps = 2000;
  Mode mode = Mode::both;
  std::string output_path;
};

/// Throws ConfigError naming the first invalid field.
void validate(const RunConfig& cfg);

/// Sets one field from its textual form, e.g. ("field_kind", "tophat").
/// Throws ConfigError on unknown keys or unparsable values.
void set_config_field(RunConfig& cfg, std::string_view key, std::string_view value);

/// Applies `key = value` lines. Blank lines and lines starting with '#' are
/// skipped.
void apply_config_text(RunConfig& cfg, std::string_view text);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

std::string_view to_string(FieldKind kind);
std::string_view to_string(Mode mode);

/// Cutoff actually used for `cfg` (explicit value or the automatic choice).
std::size_t resolved_cutoff(const RunConfig& cfg);
AtomState make_atom(const RunConfig& cfg);
FieldState make_field(const RunConfig& cfg);
AnalyticParams make_analytic_params(const RunConfig& cfg);
double revival_time(const RunConfig& cfg);

/// Uniform grid of `steps` points on [0, t_max_over_tr * t_r].
std::vector<double> time_grid(const RunConfig& cfg);

struct SweepRow {
  double t = 0.0;
  double t_over_tr = 0.0;
  std::optional<double> purity_exact;
  std::optional<double> purity_analytic;
  double a = 0.0;
  double re_b = 0.0;
  double im_b = 0.0;
  double inversion = 0.0;
};

/// Evaluates the configured series. Density-matrix columns come from the
/// exact evolution unless mode is analytic. Exact runs check norm and
/// excitation-number conservation and the purity bounds at every sample and
/// throw InvariantViolation on failure.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "t,t_over_tr,purity_exact,purity_analytic,a,re_b,im_b,inversion";

/// Header plus one line per row; numbers use shortest round-trip form and
/// missing values are empty fields.
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
std::string format_number(double value);

struct CompareReport {
  std::size_t samples = 0;
  double max_abs_deviation = 0.0;
  double rms_deviation = 0.0;
  double transient_rate = 0.0;           // fitted k in exp(-k t^2)
  double transient_rate_expected = 0.0;  // 4 / t_c^2
  double purity_at_half_revival = 0.0;   // exact purity at t_r / 2
};

/// Exact-versus-closed-form comparison over the sweep grid. Requires
/// mode == both.
CompareReport compare_report(const RunConfig& cfg);

/// Least-squares rate k of exp(-k t^2) for the transient collapse on
/// [0, t_c]. The transient is what remains of the exact purity after the
/// revival part of the closed form is subtracted; ln of it is fitted linearly
/// in t^2 with a free intercept. NaN if fewer than three positive samples.
double fit_transient_rate(const AtomState& atom, const FieldState& field,
                          const AnalyticParams& p, std::size_t samples = 401);

struct EnvelopeFit {
  double rate = 0.0;   // w in 1/2 + exp(-w t^2)/2
  double width = 0.0;  // 1 / sqrt(2 w)
  std::vector<double> peak_times;
  std::vector<double> peak_values;
};

/// Fits the slow purity envelope through the exact purity maxima between
/// revivals, one per window [(k + 1/4) t_r, (k + 3/4) t_r], k < windows.
EnvelopeFit fit_slow_envelope(const AtomState& atom, const FieldState& field, double lambda,
                              double t_r, std::size_t windows = 5,
                              std::size_t samples_per_window = 801);

/// max - min of the exact purity on a uniform grid over [t0, t1].
double purity_peak_to_trough(const AtomState& atom, const FieldState& field, double lambda,
                             double t0, double t1, std::size_t samples = 2001);

/// Named configurations reproducing the published figures.
struct FigureRun {
  std::string name;
  RunConfig config;
};
std::vector<FigureRun> figure_runs(int figure);

}  // namespace jc
