#pragma once

#include <utility>

#include "jc/evolution.hpp"

namespace jc {

// R(theta, phi) = exp(i (theta sigma_z / 2 + phi a^dagger a)) acting on
// states. For theta == phi it commutes with the resonant Hamiltonian.

/// atom -> (e^{-i theta/2} c_g, e^{i theta/2} c_e), C_n -> e^{i n phi} C_n.
std::pair<AtomState, FieldState> apply_gauge_product(const AtomState& atom,
                                                     const FieldState& field, double theta,
                                                     double phi);

/// g[n] -> e^{i(n phi - theta/2)} g[n], e[n] -> e^{i(n phi + theta/2)} e[n].
JointState apply_gauge_joint(const JointState& s, double theta, double phi);

}  // namespace jc
