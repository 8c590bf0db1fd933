#pragma once

#include <cstddef>

#include "jc/states.hpp"

namespace jc {

/// Arguments of the Poisson-weighted oscillatory sums, with weights
/// exp(-(n - nbar)^2 / (2 nbar)) / sqrt(2 pi nbar) summed over n = 1..n_max.
class SumParams {
 public:
  /// n_max defaults to default_cutoff(nbar). Throws DomainError unless
  /// nbar > 0 and n_max >= nbar + 12 sqrt(nbar).
  SumParams(double nbar, double lambda_t);
  SumParams(double nbar, double lambda_t, std::size_t n_max);

  double nbar() const noexcept { return nbar_; }
  double lambda_t() const noexcept { return lambda_t_; }
  std::size_t n_max() const noexcept { return n_max_; }

 private:
  double nbar_;
  double lambda_t_;
  std::size_t n_max_;
};

struct SqrtLinearization {
  double sqrt_n;
  double inv_sqrt_n;
};

/// First-order expansions of sqrt(n) and 1/sqrt(n) about n = nbar:
/// sqrt(nbar)/2 + n/(2 sqrt(nbar)) and 3/(2 sqrt(nbar)) - n/(2 nbar^{3/2}).
SqrtLinearization sqrt_linearization(double n, double nbar);

/// Normal average of exp(-i beta t) with mean beta_bar and deviation sigma:
/// exp(-sigma^2 t^2 / 2 - i beta_bar t).
cplx gaussian_characteristic(double sigma, double beta_bar, double t);
/// Normal average of cos(beta t): cos(beta_bar t) exp(-sigma^2 t^2 / 2).
double gaussian_cos_average(double sigma, double beta_bar, double t);
/// Normal average of sin(beta t): sin(beta_bar t) exp(-sigma^2 t^2 / 2).
double gaussian_sin_average(double sigma, double beta_bar, double t);

/// S1: weighted sum of exp(i lambda t / (2 sqrt(n))).
cplx sum_s1_numeric(const SumParams& p);
/// exp(-(lambda t)^2 / (32 nbar^2) + i lambda t / (2 sqrt(nbar)))
cplx sum_s1_closed(const SumParams& p);

/// S2: weighted sum of cos^2(sqrt(n) lambda t).
double sum_s2_numeric(const SumParams& p);
/// 1/2 + exp(-(lambda t)^2 / 2) cos(2 sqrt(nbar) lambda t) / 2.
///
/// Obtained by applying the Gaussian cosine average to
/// cos^2 x = (1 + cos 2x)/2 with 2 sqrt(n) ~ sqrt(nbar) + n/sqrt(nbar).
/// The often-quoted 1/2 + exp(-(lambda t)^2/2) cos(sqrt(nbar) lambda t)
/// (see sum_s2_closed_uncorrected) drops the factor 1/2 and halves the
/// frequency; it does not track the sum.
double sum_s2_closed(const SumParams& p);
double sum_s2_closed_uncorrected(const SumParams& p);

/// S3: weighted sum of cos(sqrt(n) lambda t) sin(sqrt(n+1) lambda t).
double sum_s3_numeric(const SumParams& p);
/// exp(-(lambda t)^2/2) sin(2 sqrt(nbar) lambda t)/2
///   + exp(-(lambda t)^2/(32 nbar^2)) sin(lambda t/(2 sqrt(nbar)))/2
double sum_s3_closed(const SumParams& p);

}  // namespace jc
