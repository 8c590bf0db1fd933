#pragma once

#include "jc/reduction.hpp"

namespace jc {

/// Parameters of the large-nbar closed forms.
///
/// `theta` is the relative atomic phase arg(c_g) - arg(c_e) measured after the
/// field phase has been gauged to zero, i.e. theta_atom - phi for a coherent
/// field with alpha = e^{-i phi} sqrt(nbar).
class AnalyticParams {
 public:
  /// Throws DomainError unless nbar > 0, lambda > 0, magnitudes are
  /// non-negative and mag_g^2 + mag_e^2 = 1 within 1e-12.
  AnalyticParams(double nbar, double lambda, double mag_g, double mag_e, double theta);

  /// Builds the parameters for an atom interacting with a coherent field of
  /// the given mean and phase.
  static AnalyticParams from_states(const AtomState& atom, double nbar, double phi,
                                    double lambda);

  double nbar() const noexcept { return nbar_; }
  double lambda() const noexcept { return lambda_; }
  double mag_g() const noexcept { return mag_g_; }
  double mag_e() const noexcept { return mag_e_; }
  double theta() const noexcept { return theta_; }
  double collapse_time() const noexcept { return t_c_; }
  double revival_time() const noexcept { return t_r_; }

 private:
  double nbar_;
  double lambda_;
  double mag_g_;
  double mag_e_;
  double theta_;
  double t_c_;
  double t_r_;
};

/// Smallest nbar accepted by analytic_rho and purity_t1.
inline constexpr double kAnalyticMinNbar = 4.0;

/// t_c = 2 / lambda
double collapse_time(double lambda);
/// t_r = 2 pi sqrt(nbar) / lambda
double revival_time(double lambda, double nbar);

/// Gaussian-envelope approximation of the reduced density matrix elements.
AtomDensity analytic_rho(double t, const AnalyticParams& p);

/// Closed-form purity for arbitrary atomic magnitudes and phase: a slow
/// revival envelope, a transient Gaussian collapse and their cross term.
double purity_t1(double t, const AnalyticParams& p);

/// The revival part of purity_t1 alone:
/// 1/2 + 2 [|c_g c_e|^2 cos^2(theta) cos^2(pi t/t_r) + sin^2(pi t/t_r)/4] S(t)^2
/// with S(t) = exp(-pi^2 t^2 / (8 nbar t_r^2)).
double purity_revival_part(double t, const AnalyticParams& p);

/// Purity for an atom starting in |e> (excited_initial) or |g>. Only nbar and
/// lambda are read from `p`; the flag selects the sign of the cross term.
double purity_max(double t, const AnalyticParams& p, bool excited_initial);

/// Purity for equal magnitudes |c_g| = |c_e| and relative phase theta.
/// Throws DomainError if the magnitudes differ by more than 1e-12.
double purity_theta(double t, const AnalyticParams& p);

/// Upper envelope 1/2 + exp(-pi^2 t^2 / (4 nbar t_r^2)) / 2, shared by all
/// initial atomic states.
double purity_min(double t, const AnalyticParams& p);

/// Effective sin^2(theta) for c_g = e^{-i delta/2}|c_g|, c_e = e^{i delta/2}|c_e|:
/// 1 - 4 |c_g c_e cos(delta)|^2.
double general_theta_substitution(double mag_g, double mag_e, double delta);

}  // namespace jc
