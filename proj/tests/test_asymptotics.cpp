#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "jc/asymptotics.hpp"
#include "jc/errors.hpp"

using namespace jc;
using std::numbers::pi;

namespace {

template <class F>
double integrate(F&& f, double lo, double hi, double tol = 1e-12) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 25, tol);
}

double normal_weight(double x, double nbar) {
  const double d = x - nbar;
  return std::exp(-d * d / (2.0 * nbar)) / std::sqrt(2.0 * pi * nbar);
}

// Max pointwise |numeric - closed| over 500 points of lambda t in [0, 5].
struct ClosedFormErrors {
  double s1 = 0.0;
  double s2 = 0.0;
  double s2_uncorrected = 0.0;
  double s3 = 0.0;
};

ClosedFormErrors closed_form_errors(double nbar) {
  ClosedFormErrors e;
  for (int k = 0; k < 500; ++k) {
    const SumParams p(nbar, 5.0 * k / 499.0);
    e.s1 = std::max(e.s1, std::abs(sum_s1_numeric(p) - sum_s1_closed(p)));
    e.s2 = std::max(e.s2, std::abs(sum_s2_numeric(p) - sum_s2_closed(p)));
    e.s2_uncorrected =
        std::max(e.s2_uncorrected, std::abs(sum_s2_numeric(p) - sum_s2_closed_uncorrected(p)));
    e.s3 = std::max(e.s3, std::abs(sum_s3_numeric(p) - sum_s3_closed(p)));
  }
  return e;
}

}  // namespace

TEST_CASE("sqrt_linearization") {
  const auto at_mean = sqrt_linearization(400.0, 400.0);
  CHECK(at_mean.sqrt_n == 20.0);
  CHECK(at_mean.inv_sqrt_n == doctest::Approx(0.05).epsilon(1e-15));

  // one standard deviation out: error is (n - nbar)^2 / (8 nbar^{3/2}) to leading order
  const auto off = sqrt_linearization(420.0, 400.0);
  CHECK(std::abs(off.sqrt_n - std::sqrt(420.0)) < 1.0 / 20.0);
  CHECK(std::abs(off.sqrt_n - std::sqrt(420.0)) == doctest::Approx(1.0 / 160.0).epsilon(0.05));
  CHECK(std::abs(off.inv_sqrt_n - 1.0 / std::sqrt(420.0)) < 1.0 / 400.0);

  const auto origin = sqrt_linearization(0.0, 400.0);
  CHECK(origin.sqrt_n == 10.0);
  CHECK(origin.inv_sqrt_n == doctest::Approx(0.075));
  CHECK(std::abs(origin.sqrt_n - std::sqrt(0.0)) > 5.0);  // only valid near nbar
}

TEST_CASE("Gaussian averages") {
  CHECK(gaussian_characteristic(2.0, 3.0, 0.0) == cplx{1.0, 0.0});
  CHECK(std::abs(gaussian_characteristic(1.0, 0.0, 1.0) - std::exp(-0.5)) < 1e-16);
  CHECK(gaussian_cos_average(0.7, 1.3, 2.1) == gaussian_characteristic(0.7, 1.3, 2.1).real());
  CHECK(gaussian_sin_average(0.7, 1.3, 2.1) == -gaussian_characteristic(0.7, 1.3, 2.1).imag());
}

TEST_CASE("Gaussian averages match adaptive quadrature") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> sig(0.1, 5.0);
  std::uniform_real_distribution<double> mean(-20.0, 20.0);
  std::uniform_real_distribution<double> time(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double sigma = sig(rng);
    const double beta_bar = mean(rng);
    const double t = time(rng);
    const auto density = [&](double beta) {
      const double z = (beta - beta_bar) / sigma;
      return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * pi));
    };
    const double lo = beta_bar - 10.0 * sigma;
    const double hi = beta_bar + 10.0 * sigma;
    const double re = integrate([&](double b) { return density(b) * std::cos(b * t); }, lo, hi, 1e-10);
    const double im = integrate([&](double b) { return -density(b) * std::sin(b * t); }, lo, hi, 1e-10);
    const cplx closed = gaussian_characteristic(sigma, beta_bar, t);
    CHECK(std::abs(closed - cplx{re, im}) < 1e-8);
    CHECK(std::abs(gaussian_sin_average(sigma, beta_bar, t) + im) < 1e-8);
  }
}

TEST_CASE("SumParams validation") {
  CHECK(SumParams(400.0, 1.0).n_max() == default_cutoff(400.0));
  CHECK_THROWS_AS(SumParams(400.0, 1.0, 500), DomainError);
  CHECK_THROWS_AS(SumParams(0.0, 1.0), DomainError);
  CHECK_NOTHROW(SumParams(400.0, 1.0, 640));
}

TEST_CASE("sums at lambda t = 0") {
  const SumParams p(400.0, 0.0);
  CHECK(std::abs(sum_s1_numeric(p) - cplx{1.0, 0.0}) < 1e-12);
  CHECK(sum_s1_closed(p) == cplx{1.0, 0.0});
  CHECK(sum_s2_numeric(p) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sum_s2_closed(p) == 1.0);
  CHECK(sum_s3_numeric(p) == 0.0);
  CHECK(sum_s3_closed(p) == 0.0);
}

TEST_CASE("S1 closed form") {
  const SumParams large(400.0, 10.0);
  const double err_large = std::abs(sum_s1_numeric(large) - sum_s1_closed(large));
  CHECK(err_large <= 1e-3);
  const SumParams small(16.0, 10.0);
  const double err_small = std::abs(sum_s1_numeric(small) - sum_s1_closed(small));
  CHECK(err_small > err_large);
}

TEST_CASE("S2 collapses to one half") {
  const SumParams p(400.0, 3.0);
  CHECK(std::abs(sum_s2_numeric(p) - 0.5) < 0.01);
}

TEST_CASE("closed forms track the sums at nbar = 400") {
  const ClosedFormErrors e = closed_form_errors(400.0);
  CHECK(e.s1 <= 0.01);
  CHECK(e.s2 <= 0.01);
  CHECK(e.s3 <= 0.01);
  // the uncorrected S2 line is off by O(1)
  CHECK(e.s2_uncorrected > 0.5);
}

TEST_CASE("closed-form error shrinks with nbar") {
  const ClosedFormErrors e16 = closed_form_errors(16.0);
  const ClosedFormErrors e100 = closed_form_errors(100.0);
  const ClosedFormErrors e400 = closed_form_errors(400.0);
  CHECK(e100.s1 < e16.s1);
  CHECK(e400.s1 < e100.s1);
  CHECK(e100.s2 < e16.s2);
  CHECK(e400.s2 < e100.s2);
  CHECK(e100.s3 < e16.s3);
  CHECK(e400.s3 < e100.s3);
}

TEST_CASE("slow S3 term dominates near the revival") {
  const double nbar = 400.0;
  const double lt = 0.5 * 2.0 * pi * std::sqrt(nbar);  // half the revival time, lambda = 1
  const SumParams p(nbar, lt);
  const double slow = 0.5 * std::exp(-lt * lt / (32.0 * nbar * nbar)) *
                      std::sin(lt / (2.0 * std::sqrt(nbar)));
  CHECK(slow > 0.49);
  CHECK(std::abs(sum_s3_closed(p) - slow) < 1e-12);
  CHECK(std::abs(sum_s3_numeric(p) - slow) < 0.02);
}

TEST_CASE("sums equal their integrals for nbar >= 100") {
  for (double nbar : {100.0, 400.0}) {
    for (double lt : {0.0, 0.7, 2.5, 5.0}) {
      CAPTURE(nbar);
      CAPTURE(lt);
      const SumParams p(nbar, lt);
      const double hi = static_cast<double>(p.n_max());
      const double s1_re = integrate(
          [&](double x) { return normal_weight(x, nbar) * std::cos(lt / (2.0 * std::sqrt(x))); },
          0.0, hi);
      const double s1_im = integrate(
          [&](double x) { return normal_weight(x, nbar) * std::sin(lt / (2.0 * std::sqrt(x))); },
          0.0, hi);
      const double s2 = integrate(
          [&](double x) {
            const double c = std::cos(std::sqrt(x) * lt);
            return normal_weight(x, nbar) * c * c;
          },
          0.0, hi);
      const double s3 = integrate(
          [&](double x) {
            return normal_weight(x, nbar) * std::cos(std::sqrt(x) * lt) *
                   std::sin(std::sqrt(x + 1.0) * lt);
          },
          0.0, hi);
      CHECK(std::abs(sum_s1_numeric(p) - cplx{s1_re, s1_im}) < 1e-6);
      CHECK(std::abs(sum_s2_numeric(p) - s2) < 1e-6);
      CHECK(std::abs(sum_s3_numeric(p) - s3) < 1e-6);
    }
  }
}

TEST_CASE("sums do not depend on n_max beyond nbar + 12 sqrt(nbar)") {
  for (double nbar : {100.0, 400.0}) {
    for (double lt : {0.3, 2.3, 4.9}) {
      const SumParams base(nbar, lt);
      const SumParams longer(nbar, lt, base.n_max() + 400);
      CHECK(std::abs(sum_s1_numeric(base) - sum_s1_numeric(longer)) < 1e-12);
      CHECK(std::abs(sum_s2_numeric(base) - sum_s2_numeric(longer)) < 1e-12);
      CHECK(std::abs(sum_s3_numeric(base) - sum_s3_numeric(longer)) < 1e-12);
    }
  }
}
