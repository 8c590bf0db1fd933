#include "jc/reduction.hpp"

#include <cmath>

#include "jc/parallel.hpp"

namespace jc {

bool AtomDensity::is_valid(double tol) const noexcept {
  return a >= -tol && a <= 1.0 + tol && std::norm(b) <= a * (1.0 - a) + tol;
}

AtomDensity reduce(const JointState& s) {
  AtomDensity d{0.0, cplx{}};
  for (std::size_t n = 0; n < s.g.size(); ++n) {
    d.a += std::norm(s.g[n]);
    d.b += s.g[n] * std::conj(s.e[n]);
  }
  return d;
}

double purity(const AtomDensity& d) {
  return d.a * d.a + (1.0 - d.a) * (1.0 - d.a) + 2.0 * std::norm(d.b);
}

double inversion(const AtomDensity& d) { return 1.0 - 2.0 * d.a; }

std::vector<AtomDensity> evolve_reduced_grid(const AtomState& atom, const FieldState& field,
                                             double lambda, std::span<const double> times) {
  std::vector<AtomDensity> out(times.size());
  detail::parallel_for(times.size(), [&](std::size_t k) {
    out[k] = reduce(evolve(atom, field, lambda, times[k]));
  });
  return out;
}

}  // namespace jc
