#include "jc/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jc/errors.hpp"

namespace jc {

namespace {

using std::numbers::pi;

// Shared building blocks of the closed forms at time t.
struct Envelopes {
  double slow_phase;  // pi t / t_r
  double fast_phase;  // 4 sqrt(nbar) t / t_c
  double slow;        // exp(-pi^2 t^2 / (8 nbar t_r^2))
  double fast;        // exp(-2 t^2 / t_c^2)
};

Envelopes envelopes(double t, const AnalyticParams& p) {
  const double tc = p.collapse_time();
  const double tr = p.revival_time();
  const double x = t / tr;
  const double y = t / tc;
  return {pi * x, 4.0 * std::sqrt(p.nbar()) * y,
          std::exp(-pi * pi * x * x / (8.0 * p.nbar())), std::exp(-2.0 * y * y)};
}

void require_large_nbar(const AnalyticParams& p) {
  if (p.nbar() < kAnalyticMinNbar) {
    throw DomainError("closed-form approximation needs nbar >= 4, got " +
                      std::to_string(p.nbar()));
  }
}

}  // namespace

AnalyticParams::AnalyticParams(double nbar, double lambda, double mag_g, double mag_e,
                               double theta)
    : nbar_(nbar), lambda_(lambda), mag_g_(mag_g), mag_e_(mag_e), theta_(theta) {
  if (!(nbar > 0.0)) throw DomainError("nbar must be > 0");
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
  if (!(mag_g >= 0.0 && mag_e >= 0.0)) throw DomainError("magnitudes must be >= 0");
  if (!(std::abs(mag_g * mag_g + mag_e * mag_e - 1.0) <= kNormTolerance)) {
    throw DomainError("mag_g^2 + mag_e^2 must equal 1");
  }
  t_c_ = jc::collapse_time(lambda);
  t_r_ = jc::revival_time(lambda, nbar);
}

AnalyticParams AnalyticParams::from_states(const AtomState& atom, double nbar, double phi,
                                           double lambda) {
  return AnalyticParams(nbar, lambda, std::abs(atom.c_g()), std::abs(atom.c_e()),
                        atom.relative_phase() - phi);
}

double collapse_time(double lambda) { return 2.0 / lambda; }

double revival_time(double lambda, double nbar) {
  return 2.0 * pi * std::sqrt(nbar) / lambda;
}

AtomDensity analytic_rho(double t, const AnalyticParams& p) {
  require_large_nbar(p);
  const Envelopes env = envelopes(t, p);
  const double diff = 0.5 * (p.mag_g() * p.mag_g() - p.mag_e() * p.mag_e());
  const double cross = p.mag_g() * p.mag_e();
  const double s_th = std::sin(p.theta());
  const double c_th = std::cos(p.theta());

  AtomDensity d;
  d.a = 0.5 + (diff * std::cos(env.fast_phase) + cross * s_th * std::sin(env.fast_phase)) *
                  env.fast;
  const cplx slow{cross * c_th * std::cos(env.slow_phase), 0.5 * std::sin(env.slow_phase)};
  const double fast_im =
      diff * std::sin(env.fast_phase) + cross * s_th * std::cos(env.fast_phase);
  d.b = slow * env.slow + cplx{0.0, fast_im * env.fast};
  return d;
}

double purity_revival_part(double t, const AnalyticParams& p) {
  const Envelopes env = envelopes(t, p);
  const double cross = p.mag_g() * p.mag_e();
  const double c_th = std::cos(p.theta());
  const double cos_slow = std::cos(env.slow_phase);
  const double sin_slow = std::sin(env.slow_phase);
  return 0.5 + 2.0 *
                   (cross * cross * c_th * c_th * cos_slow * cos_slow +
                    0.25 * sin_slow * sin_slow) *
                   env.slow * env.slow;
}

double purity_t1(double t, const AnalyticParams& p) {
  require_large_nbar(p);
  const Envelopes env = envelopes(t, p);
  const double diff = p.mag_g() * p.mag_g() - p.mag_e() * p.mag_e();
  const double cross = p.mag_g() * p.mag_e();
  const double s_th = std::sin(p.theta());

  const double transient =
      0.5 * (diff * diff + 4.0 * cross * cross * s_th * s_th) * env.fast * env.fast;
  const double mixed = std::sin(env.slow_phase) *
                       (diff * std::sin(env.fast_phase) +
                        2.0 * cross * s_th * std::cos(env.fast_phase)) *
                       env.slow * env.fast;
  return purity_revival_part(t, p) + transient + mixed;
}

double purity_max(double t, const AnalyticParams& p, bool excited_initial) {
  const Envelopes env = envelopes(t, p);
  const double sin_slow = std::sin(env.slow_phase);
  const double sign = excited_initial ? -1.0 : 1.0;
  return 0.5 + 0.5 * sin_slow * sin_slow * env.slow * env.slow +
         0.5 * env.fast * env.fast +
         sign * sin_slow * std::sin(env.fast_phase) * env.slow * env.fast;
}

double purity_theta(double t, const AnalyticParams& p) {
  if (std::abs(p.mag_g() - p.mag_e()) > 1e-12) {
    throw DomainError("purity_theta requires |c_g| = |c_e|");
  }
  const Envelopes env = envelopes(t, p);
  const double s_th = std::sin(p.theta());
  const double cos_slow = std::cos(env.slow_phase);
  return 0.5 + 0.5 * (1.0 - s_th * s_th * cos_slow * cos_slow) * env.slow * env.slow +
         0.5 * s_th * s_th * env.fast * env.fast +
         std::sin(env.slow_phase) * s_th * std::cos(env.fast_phase) * env.slow * env.fast;
}

double purity_min(double t, const AnalyticParams& p) {
  const Envelopes env = envelopes(t, p);
  return 0.5 + 0.5 * env.slow * env.slow;
}

double general_theta_substitution(double mag_g, double mag_e, double delta) {
  const double c = mag_g * mag_e * std::cos(delta);
  return 1.0 - 4.0 * c * c;
}

}  // namespace jc
