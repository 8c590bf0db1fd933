#include "jc/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "jc/errors.hpp"

namespace jc {

namespace {

using std::numbers::pi;

// Calls term(n, w_n) for n = 1..n_max with the normal weight w_n.
template <class T, class Term>
T weighted_sum(const SumParams& p, Term&& term) {
  const double nbar = p.nbar();
  const double norm = 1.0 / std::sqrt(2.0 * pi * nbar);
  T total{};
  for (std::size_t n = 1; n <= p.n_max(); ++n) {
    const double k = static_cast<double>(n);
    const double d = k - nbar;
    total += norm * std::exp(-d * d / (2.0 * nbar)) * term(k);
  }
  return total;
}

}  // namespace

SumParams::SumParams(double nbar, double lambda_t)
    : SumParams(nbar, lambda_t, nbar > 0.0 ? default_cutoff(nbar) : 0) {}

SumParams::SumParams(double nbar, double lambda_t, std::size_t n_max)
    : nbar_(nbar), lambda_t_(lambda_t), n_max_(n_max) {
  if (!(nbar > 0.0)) throw DomainError("nbar must be > 0");
  if (static_cast<double>(n_max) < nbar + 12.0 * std::sqrt(nbar)) {
    throw DomainError("n_max must be >= nbar + 12 sqrt(nbar)");
  }
}

SqrtLinearization sqrt_linearization(double n, double nbar) {
  const double root = std::sqrt(nbar);
  return {0.5 * root + n / (2.0 * root), 1.5 / root - n / (2.0 * nbar * root)};
}

cplx gaussian_characteristic(double sigma, double beta_bar, double t) {
  return std::exp(cplx{-0.5 * sigma * sigma * t * t, -beta_bar * t});
}

double gaussian_cos_average(double sigma, double beta_bar, double t) {
  return std::cos(beta_bar * t) * std::exp(-0.5 * sigma * sigma * t * t);
}

double gaussian_sin_average(double sigma, double beta_bar, double t) {
  return std::sin(beta_bar * t) * std::exp(-0.5 * sigma * sigma * t * t);
}

cplx sum_s1_numeric(const SumParams& p) {
  const double lt = p.lambda_t();
  return weighted_sum<cplx>(p, [lt](double n) {
    return std::polar(1.0, lt / (2.0 * std::sqrt(n)));
  });
}

cplx sum_s1_closed(const SumParams& p) {
  const double lt = p.lambda_t();
  const double nbar = p.nbar();
  return std::exp(cplx{-lt * lt / (32.0 * nbar * nbar), lt / (2.0 * std::sqrt(nbar))});
}

double sum_s2_numeric(const SumParams& p) {
  const double lt = p.lambda_t();
  return weighted_sum<double>(p, [lt](double n) {
    const double c = std::cos(std::sqrt(n) * lt);
    return c * c;
  });
}

double sum_s2_closed(const SumParams& p) {
  const double lt = p.lambda_t();
  // The frequency 2 sqrt(nbar) is the mean of 2 sqrt(n); unit standard
  // deviation in that frequency gives the exp(-(lambda t)^2/2) damping.
  return 0.5 + 0.5 * gaussian_cos_average(1.0, 2.0 * std::sqrt(p.nbar()), lt);
}

double sum_s2_closed_uncorrected(const SumParams& p) {
  const double lt = p.lambda_t();
  return 0.5 + std::exp(-0.5 * lt * lt) * std::cos(std::sqrt(p.nbar()) * lt);
}

double sum_s3_numeric(const SumParams& p) {
  const double lt = p.lambda_t();
  return weighted_sum<double>(p, [lt](double n) {
    return std::cos(std::sqrt(n) * lt) * std::sin(std::sqrt(n + 1.0) * lt);
  });
}

double sum_s3_closed(const SumParams& p) {
  const double lt = p.lambda_t();
  const double nbar = p.nbar();
  const double root = std::sqrt(nbar);
  return 0.5 * std::exp(-0.5 * lt * lt) * std::sin(2.0 * root * lt) +
         0.5 * std::exp(-lt * lt / (32.0 * nbar * nbar)) * std::sin(lt / (2.0 * root));
}

}  // namespace jc
