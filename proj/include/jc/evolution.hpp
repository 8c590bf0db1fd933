#pragma once

#include <span>
#include <vector>

#include "jc/states.hpp"

namespace jc {

/// Joint atom-field state sum_n g[n]|g,n> + e[n]|e,n>, n = 0..cutoff.
struct JointState {
  std::vector<cplx> g;
  std::vector<cplx> e;

  std::size_t cutoff() const noexcept { return g.size() - 1; }
};

/// Coupling of the resonant model. Throws DomainError unless lambda > 0.
class SimParams {
 public:
  explicit SimParams(double lambda);
  double lambda() const noexcept { return lambda_; }

 private:
  double lambda_;
};

/// Product state (c_g|g> + c_e|e>) (x) sum_n C_n|n>.
JointState product_state(const AtomState& atom, const FieldState& field);

/// Resonant evolution in the interaction picture, solved manifold by manifold
/// of the excitation number. Each manifold {|e,n-1>, |g,n>} rotates at
/// sqrt(n) lambda; |g,0> is stationary. The amplitude C_{cutoff+1} is taken
/// as zero.
JointState evolve(const AtomState& atom, const FieldState& field, double lambda, double t);

/// sum_n |g[n]|^2 + |e[n]|^2
double state_norm(const JointState& s);

/// Expectation of sigma_z/2 + a^dagger a + 1/2.
double excitation_expectation(const JointState& s);

/// evolve() at every time in `times`. Element k corresponds to times[k].
std::vector<JointState> evolve_grid(const AtomState& atom, const FieldState& field,
                                    double lambda, std::span<const double> times);

}  // namespace jc
