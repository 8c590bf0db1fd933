#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace jc {

using cplx = std::complex<double>;

/// Pure state of the two-level atom, c_g|g> + c_e|e>.
class AtomState {
 public:
  /// Throws DomainError unless |c_g|^2 + |c_e|^2 = 1 within 1e-12.
  AtomState(cplx c_g, cplx c_e);

  cplx c_g() const noexcept { return c_g_; }
  cplx c_e() const noexcept { return c_e_; }

  /// arg(c_g) - arg(c_e); zero when either amplitude vanishes.
  double relative_phase() const noexcept;

 private:
  cplx c_g_;
  cplx c_e_;
};

/// Cavity-mode state truncated to photon numbers 0..cutoff.
///
/// `nbar` is the nominal mean photon number the state was built for and
/// `phi` the field phase (alpha = e^{-i phi} sqrt(nbar) for coherent states).
/// Both are bookkeeping; the amplitudes are authoritative.
class FieldState {
 public:
  /// Throws DomainError if the amplitudes are empty or not normalized.
  FieldState(std::vector<cplx> amplitudes, double nbar, double phi);

  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  cplx amplitude(std::size_t n) const noexcept {
    return n < amplitudes_.size() ? amplitudes_[n] : cplx{};
  }
  std::size_t cutoff() const noexcept { return amplitudes_.size() - 1; }
  double nbar() const noexcept { return nbar_; }
  double phi() const noexcept { return phi_; }

  /// sum_n n |C_n|^2
  double mean_photon_number() const noexcept;
  /// |C_cutoff|^2 + |C_{cutoff-1}|^2
  double tail_mass() const noexcept;

 private:
  std::vector<cplx> amplitudes_;
  double nbar_;
  double phi_;
};

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kTailMassLimit = 1e-20;

/// c_g = sqrt(p_g) e^{i theta}, c_e = sqrt(1 - p_g).
AtomState atom_state(double p_g, double theta);

AtomState ground_atom();
AtomState excited_atom();

/// Smallest cutoff used by default for a Poisson field of mean `nbar`:
/// ceil(nbar + 12 sqrt(nbar) + 20).
std::size_t default_cutoff(double nbar);

/// Coherent state |alpha>, alpha = e^{-i phi} sqrt(nbar), truncated at
/// `cutoff` and renormalized. Amplitudes are built in the log domain so large
/// nbar does not overflow. Throws TruncationError when the discarded tail is
/// not negligible (tail_mass() >= 1e-20 before renormalization).
FieldState coherent_field(double nbar, double phi, std::size_t cutoff);

/// Uniform superposition of |nbar - D> .. |nbar + D>.
FieldState tophat_field(long nbar, long half_width, std::size_t cutoff);

FieldState fock_field(long n, std::size_t cutoff);

/// Most probable photon number of a Poisson distribution with mean `nbar`.
/// At integer nbar the pmf ties at nbar - 1 and nbar; the larger is returned.
std::size_t poisson_mode(double nbar);

}  // namespace jc
