#include <doctest.h>

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "jc/errors.hpp"
#include "jc/sweep.hpp"

using namespace jc;
using std::numbers::pi;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.nbar = 16.0;
  cfg.steps = 50;
  cfg.t_max_over_tr = 1.0;
  return cfg;
}

std::string csv_of(const RunConfig& cfg) {
  std::ostringstream out;
  const auto rows = run_sweep(cfg);
  write_csv(out, rows);
  return out.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

TEST_CASE("config text sets every field") {
  RunConfig cfg;
  apply_config_text(cfg, R"(# sweep settings
nbar = 100
lambda = 2
p_g = 0.25
theta = 1.5
phi = -0.5

field_kind = tophat
tophat_halfwidth = 7
cutoff = 300
t_max_over_tr = 0.5
steps = 33
mode = exact
output_path = out.csv
)");
  CHECK(cfg.nbar == 100.0);
  CHECK(cfg.lambda == 2.0);
  CHECK(cfg.p_g == 0.25);
  CHECK(cfg.theta == 1.5);
  CHECK(cfg.phi == -0.5);
  CHECK(cfg.field_kind == FieldKind::tophat);
  CHECK(cfg.tophat_halfwidth == 7);
  CHECK(cfg.cutoff == std::optional<std::size_t>{300});
  CHECK(cfg.t_max_over_tr == 0.5);
  CHECK(cfg.steps == 33);
  CHECK(cfg.mode == Mode::exact);
  CHECK(cfg.output_path == "out.csv");

  set_config_field(cfg, "cutoff", "auto");
  CHECK_FALSE(cfg.cutoff.has_value());
}

TEST_CASE("config errors name the field") {
  RunConfig cfg;
  const auto field_of = [&](std::string_view key, std::string_view value) {
    try {
      set_config_field(cfg, key, value);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  CHECK(field_of("nbar", "lots") == "nbar");
  CHECK(field_of("steps", "2.5") == "steps");
  CHECK(field_of("mode", "fast") == "mode");
  CHECK(field_of("field_kind", "squeezed") == "field_kind");
  CHECK(field_of("colour", "red") == "colour");
  CHECK(field_of("cutoff", "-3") == "cutoff");
  CHECK_THROWS_AS(apply_config_text(cfg, "nbar 12\n"), ConfigError);
}

TEST_CASE("validate rejects bad configurations") {
  const auto invalid_field = [](RunConfig cfg) {
    try {
      validate(cfg);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<valid>");
  };
  RunConfig cfg = small_config();
  CHECK(invalid_field(cfg) == "<valid>");
  cfg.steps = 1;
  CHECK(invalid_field(cfg) == "steps");
  cfg = small_config();
  cfg.t_max_over_tr = 0.0;
  CHECK(invalid_field(cfg) == "t_max_over_tr");
  cfg = small_config();
  cfg.p_g = 1.2;
  CHECK(invalid_field(cfg) == "p_g");
  cfg = small_config();
  cfg.lambda = -1.0;
  CHECK(invalid_field(cfg) == "lambda");
  cfg = small_config();
  cfg.nbar = 2.0;
  CHECK(invalid_field(cfg) == "nbar");
  cfg.mode = Mode::exact;
  CHECK(invalid_field(cfg) == "<valid>");
  cfg = small_config();
  cfg.field_kind = FieldKind::tophat;
  cfg.tophat_halfwidth = 20;
  CHECK(invalid_field(cfg) == "tophat_halfwidth");
  cfg.tophat_halfwidth = 5;
  cfg.cutoff = 18;
  CHECK(invalid_field(cfg) == "cutoff");
  cfg = small_config();
  cfg.field_kind = FieldKind::fock;
  cfg.nbar = 16.5;
  CHECK(invalid_field(cfg) == "nbar");
}

TEST_CASE("numbers are written in shortest round-trip form") {
  for (double x : {0.1, 1.0 / 3.0, 125.66370614359172, 1e-300, -0.0, 0.9989134824669049}) {
    const std::string text = format_number(x);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(back == x);
  }
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("CSV layout") {
  RunConfig cfg = small_config();
  const std::string csv = csv_of(cfg);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == kCsvHeader);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    const auto cells = split(line, ',');
    REQUIRE(cells.size() == 8);
    for (const auto& cell : cells) CHECK_FALSE(cell.empty());
    ++rows;
  }
  CHECK(rows == 50);

  cfg.mode = Mode::analytic;
  std::istringstream analytic(csv_of(cfg));
  std::getline(analytic, line);
  std::getline(analytic, line);
  const auto cells = split(line, ',');
  CHECK(cells[2].empty());
  CHECK(std::stod(cells[3]) == doctest::Approx(1.0).epsilon(1e-12));

  cfg.mode = Mode::exact;
  std::istringstream exact(csv_of(cfg));
  std::getline(exact, line);
  std::getline(exact, line);
  CHECK(split(line, ',')[3].empty());
}

TEST_CASE("identical configurations give byte-identical CSV") {
  RunConfig cfg = small_config();
  cfg.theta = 0.3;
  cfg.phi = 1.1;
  cfg.steps = 400;
  CHECK(csv_of(cfg) == csv_of(cfg));
}

TEST_CASE("sweep rows satisfy the physical bounds") {
  for (auto kind : {FieldKind::coherent, FieldKind::tophat, FieldKind::fock}) {
    RunConfig cfg = small_config();
    cfg.field_kind = kind;
    cfg.tophat_halfwidth = 4;
    cfg.p_g = 0.3;
    cfg.theta = 0.8;
    cfg.steps = 300;
    cfg.t_max_over_tr = 2.0;
    const auto rows = run_sweep(cfg);
    for (const auto& row : rows) {
      REQUIRE(row.purity_exact.has_value());
      CHECK(*row.purity_exact >= 0.5 - 1e-12);
      CHECK(*row.purity_exact <= 1.0 + 1e-12);
      CHECK(row.a >= 0.0);
      CHECK(row.a <= 1.0);
      CHECK(row.re_b * row.re_b + row.im_b * row.im_b <= row.a * (1.0 - row.a) + 1e-12);
      CHECK(row.inversion == doctest::Approx(1.0 - 2.0 * row.a));
    }
    CHECK(rows.front().t == 0.0);
    CHECK(rows.back().t_over_tr == doctest::Approx(2.0));
  }
}

TEST_CASE("sweep reports numerical failures") {
  RunConfig cfg = small_config();
  cfg.field_kind = FieldKind::fock;
  cfg.p_g = 0.0;
  cfg.cutoff = 16;  // |e,16> needs |g,17>, which is outside the cutoff
  CHECK_THROWS_AS(run_sweep(cfg), InvariantViolation);

  cfg = small_config();
  cfg.nbar = 400.0;
  cfg.cutoff = 450;
  CHECK_THROWS_AS(run_sweep(cfg), TruncationError);
}

TEST_CASE("compare_report at nbar = 400") {
  RunConfig cfg;
  cfg.nbar = 400.0;
  cfg.steps = 2000;
  cfg.t_max_over_tr = 0.9;
  cfg.theta = pi / 2.0;

  const CompareReport r = compare_report(cfg);
  CHECK(r.samples == 2000);
  CHECK(r.max_abs_deviation < 0.05);
  CHECK(r.rms_deviation < 0.02);
  CHECK(r.transient_rate_expected == doctest::Approx(1.0));
  CHECK(std::abs(r.transient_rate / r.transient_rate_expected - 1.0) <= 0.15);
  CHECK(r.purity_at_half_revival >= 0.95);

  for (double p_g : {0.0, 0.2, 0.9}) {
    cfg.p_g = p_g;
    cfg.steps = 10;
    CHECK(compare_report(cfg).purity_at_half_revival >= 0.95);
  }

  cfg.mode = Mode::exact;
  CHECK_THROWS_AS(compare_report(cfg), ConfigError);
}

TEST_CASE("relative phase controls the mid-revival oscillation") {
  const double nbar = 400.0;
  const FieldState field = coherent_field(nbar, 0.0, default_cutoff(nbar));
  const double t_r = revival_time(1.0, nbar);
  const double aligned =
      purity_peak_to_trough(atom_state(0.5, 0.0), field, 1.0, 0.4 * t_r, 0.6 * t_r);
  const double orthogonal =
      purity_peak_to_trough(atom_state(0.5, pi / 2.0), field, 1.0, 0.4 * t_r, 0.6 * t_r);
  CHECK(orthogonal >= 5.0 * aligned);
}

TEST_CASE("figure presets") {
  CHECK(figure_runs(1).size() == 6);
  CHECK(figure_runs(2).size() == 2);
  const auto fig3 = figure_runs(3);
  REQUIRE(fig3.size() == 4);
  CHECK(fig3[3].config.tophat_halfwidth == 80);
  CHECK(fig3[0].config.field_kind == FieldKind::tophat);
  for (int f = 1; f <= 3; ++f) {
    for (const auto& run : figure_runs(f)) CHECK_NOTHROW(validate(run.config));
  }
  CHECK_THROWS_AS(figure_runs(4), ConfigError);
}
