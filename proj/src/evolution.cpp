#include "jc/evolution.hpp"

#include <cmath>

#include "jc/errors.hpp"
#include "jc/parallel.hpp"

namespace jc {

namespace {
constexpr cplx kI{0.0, 1.0};
}

SimParams::SimParams(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("coupling lambda must be finite and > 0");
  }
}

JointState product_state(const AtomState& atom, const FieldState& field) {
  const std::size_t size = field.cutoff() + 1;
  JointState s{std::vector<cplx>(size), std::vector<cplx>(size)};
  for (std::size_t n = 0; n < size; ++n) {
    s.g[n] = field.amplitude(n) * atom.c_g();
    s.e[n] = field.amplitude(n) * atom.c_e();
  }
  return s;
}

JointState evolve(const AtomState& atom, const FieldState& field, double lambda, double t) {
  const std::size_t cutoff = field.cutoff();
  const cplx cg = atom.c_g();
  const cplx ce = atom.c_e();
  JointState s{std::vector<cplx>(cutoff + 1), std::vector<cplx>(cutoff + 1)};

  s.g[0] = field.amplitude(0) * cg;
  // Manifold n >= 1 couples |e,n-1> and |g,n> with Rabi angle sqrt(n) lambda t.
  for (std::size_t n = 1; n <= cutoff + 1; ++n) {
    const double angle = std::sqrt(static_cast<double>(n)) * lambda * t;
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    if (n <= cutoff) {
      s.g[n] = field.amplitude(n) * cg * c - kI * field.amplitude(n - 1) * ce * sn;
    }
    // amplitude(cutoff + 1) is zero
    s.e[n - 1] = field.amplitude(n - 1) * ce * c - kI * field.amplitude(n) * cg * sn;
  }
  return s;
}

double state_norm(const JointState& s) {
  double total = 0.0;
  for (std::size_t n = 0; n < s.g.size(); ++n) total += std::norm(s.g[n]) + std::norm(s.e[n]);
  return total;
}

double excitation_expectation(const JointState& s) {
  double total = 0.0;
  for (std::size_t n = 0; n < s.g.size(); ++n) {
    const double k = static_cast<double>(n);
    total += std::norm(s.e[n]) * (k + 1.0) + std::norm(s.g[n]) * k;
  }
  return total;
}

std::vector<JointState> evolve_grid(const AtomState& atom, const FieldState& field,
                                    double lambda, std::span<const double> times) {
  std::vector<JointState> out(times.size());
  detail::parallel_for(times.size(),
                       [&](std::size_t k) { out[k] = evolve(atom, field, lambda, times[k]); });
  return out;
}

}  // namespace jc
