#include "jc/states.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "jc/errors.hpp"

namespace jc {

namespace {

double norm_squared(std::span<const cplx> v) {
  return std::accumulate(v.begin(), v.end(), 0.0,
                         [](double acc, cplx z) { return acc + std::norm(z); });
}

}  // namespace

AtomState::AtomState(cplx c_g, cplx c_e) : c_g_(c_g), c_e_(c_e) {
  const double norm = std::norm(c_g) + std::norm(c_e);
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw DomainError("atom state is not normalized: |c_g|^2 + |c_e|^2 = " +
                      std::to_string(norm));
  }
}

double AtomState::relative_phase() const noexcept {
  if (c_g_ == cplx{} || c_e_ == cplx{}) return 0.0;
  return std::arg(c_g_) - std::arg(c_e_);
}

FieldState::FieldState(std::vector<cplx> amplitudes, double nbar, double phi)
    : amplitudes_(std::move(amplitudes)), nbar_(nbar), phi_(phi) {
  if (amplitudes_.empty()) throw DomainError("field state has no amplitudes");
  const double norm = norm_squared(amplitudes_);
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw DomainError("field state is not normalized: sum |C_n|^2 = " +
                      std::to_string(norm));
  }
}

double FieldState::mean_photon_number() const noexcept {
  double mean = 0.0;
  for (std::size_t n = 0; n < amplitudes_.size(); ++n) {
    mean += static_cast<double>(n) * std::norm(amplitudes_[n]);
  }
  return mean;
}

double FieldState::tail_mass() const noexcept {
  const std::size_t last = amplitudes_.size() - 1;
  double tail = std::norm(amplitudes_[last]);
  if (last > 0) tail += std::norm(amplitudes_[last - 1]);
  return tail;
}

AtomState atom_state(double p_g, double theta) {
  if (!(p_g >= 0.0 && p_g <= 1.0)) {
    throw DomainError("ground-state probability must lie in [0, 1], got " +
                      std::to_string(p_g));
  }
  return AtomState(std::polar(std::sqrt(p_g), theta), cplx{std::sqrt(1.0 - p_g), 0.0});
}

AtomState ground_atom() { return AtomState({1.0, 0.0}, {0.0, 0.0}); }
AtomState excited_atom() { return AtomState({0.0, 0.0}, {1.0, 0.0}); }

std::size_t default_cutoff(double nbar) {
  return static_cast<std::size_t>(std::ceil(nbar + 12.0 * std::sqrt(nbar) + 20.0));
}

FieldState coherent_field(double nbar, double phi, std::size_t cutoff) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw DomainError("mean photon number must be finite and >= 0");
  }
  std::vector<cplx> amps(cutoff + 1);
  if (nbar == 0.0) {
    amps[0] = 1.0;
  } else {
    // ln|C_n| = -nbar/2 + (n/2) ln nbar - ln(n!)/2, arg C_n = -n phi
    const double log_nbar = std::log(nbar);
    for (std::size_t n = 0; n <= cutoff; ++n) {
      const double k = static_cast<double>(n);
      const double log_mag = -0.5 * nbar + 0.5 * k * log_nbar - 0.5 * std::lgamma(k + 1.0);
      amps[n] = std::polar(std::exp(log_mag), -k * phi);
    }
  }

  double tail = std::norm(amps[cutoff]);
  if (cutoff > 0) tail += std::norm(amps[cutoff - 1]);
  if (!(tail < kTailMassLimit)) {
    throw TruncationError("cutoff " + std::to_string(cutoff) +
                          " too small for coherent state with nbar = " +
                          std::to_string(nbar) + " (tail mass " + std::to_string(tail) +
                          ")");
  }

  const double scale = 1.0 / std::sqrt(norm_squared(amps));
  for (auto& c : amps) c *= scale;
  return FieldState(std::move(amps), nbar, phi);
}

FieldState tophat_field(long nbar, long half_width, std::size_t cutoff) {
  if (half_width < 0) throw DomainError("top-hat half-width must be >= 0");
  if (nbar - half_width < 0 || nbar + half_width > static_cast<long>(cutoff)) {
    throw DomainError("top-hat window [" + std::to_string(nbar - half_width) + ", " +
                      std::to_string(nbar + half_width) + "] exceeds [0, " +
                      std::to_string(cutoff) + "]");
  }
  std::vector<cplx> amps(cutoff + 1);
  const double height = 1.0 / std::sqrt(static_cast<double>(2 * half_width + 1));
  for (long n = nbar - half_width; n <= nbar + half_width; ++n) {
    amps[static_cast<std::size_t>(n)] = height;
  }
  return FieldState(std::move(amps), static_cast<double>(nbar), 0.0);
}

FieldState fock_field(long n, std::size_t cutoff) {
  if (n < 0 || n > static_cast<long>(cutoff)) {
    throw DomainError("Fock index " + std::to_string(n) + " outside [0, " +
                      std::to_string(cutoff) + "]");
  }
  std::vector<cplx> amps(cutoff + 1);
  amps[static_cast<std::size_t>(n)] = 1.0;
  return FieldState(std::move(amps), static_cast<double>(n), 0.0);
}

std::size_t poisson_mode(double nbar) {
  if (!(nbar >= 0.0)) throw DomainError("mean photon number must be >= 0");
  return static_cast<std::size_t>(std::floor(nbar));
}

}  // namespace jc
