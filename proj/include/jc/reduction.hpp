#pragma once

#include <span>
#include <vector>

#include "jc/evolution.hpp"

namespace jc {

/// Reduced atomic density matrix [[a, b], [b*, 1 - a]] in the (|g>, |e>) basis.
struct AtomDensity {
  double a = 1.0;  ///< <g|rho|g>
  cplx b{};        ///< <g|rho|e>

  /// 0 <= a <= 1 and |b|^2 <= a(1 - a) + tol.
  bool is_valid(double tol = 1e-12) const noexcept;
};

/// Partial trace over the field: a = sum |g[n]|^2, b = sum g[n] conj(e[n]).
AtomDensity reduce(const JointState& s);

/// Tr(rho^2) = a^2 + (1 - a)^2 + 2|b|^2
double purity(const AtomDensity& d);

/// <sigma_z> = 1 - 2a
double inversion(const AtomDensity& d);

/// reduce(evolve(atom, field, lambda, t)) over `times`, without keeping the
/// joint states. Work is split across threads; the result order always
/// follows `times`.
std::vector<AtomDensity> evolve_reduced_grid(const AtomState& atom, const FieldState& field,
                                             double lambda, std::span<const double> times);

}  // namespace jc
