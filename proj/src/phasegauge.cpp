#include "jc/phasegauge.hpp"

namespace jc {

std::pair<AtomState, FieldState> apply_gauge_product(const AtomState& atom,
                                                     const FieldState& field, double theta,
                                                     double phi) {
  AtomState gauged_atom(std::polar(1.0, -0.5 * theta) * atom.c_g(),
                        std::polar(1.0, 0.5 * theta) * atom.c_e());
  std::vector<cplx> amps(field.amplitudes().begin(), field.amplitudes().end());
  for (std::size_t n = 0; n < amps.size(); ++n) {
    amps[n] *= std::polar(1.0, static_cast<double>(n) * phi);
  }
  // alpha -> e^{i phi} alpha, i.e. the field phase shifts by -phi
  FieldState gauged_field(std::move(amps), field.nbar(), field.phi() - phi);
  return {std::move(gauged_atom), std::move(gauged_field)};
}

JointState apply_gauge_joint(const JointState& s, double theta, double phi) {
  JointState out = s;
  for (std::size_t n = 0; n < out.g.size(); ++n) {
    const double k = static_cast<double>(n);
    out.g[n] *= std::polar(1.0, k * phi - 0.5 * theta);
    out.e[n] *= std::polar(1.0, k * phi + 0.5 * theta);
  }
  return out;
}

}  // namespace jc
