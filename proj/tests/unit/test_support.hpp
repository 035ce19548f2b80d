#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library's special functions.

#include "hilbert_gauss/spectral.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// sum_{k <= n} 1 / ((k - shift)^2 pi^2), summed smallest-first in long double.
inline double inverse_square_sum(std::size_t n, double shift) {
  long double acc = 0.0L;
  for (std::size_t k = n; k >= 1; --k) {
    const long double h = static_cast<long double>(k) - shift;
    acc += 1.0L / (h * h);
  }
  return static_cast<double>(acc / (static_cast<long double>(kPi) * kPi));
}

// sum_{k > n} 1/(k - shift)^2 / pi^2 via Euler-Maclaurin on the tail.
inline double inverse_square_tail(std::size_t n, double shift) {
  // direct part up to n + 2000, then integral plus endpoint corrections
  long double acc = 0.0L;
  const std::size_t stop = n + 2000;
  for (std::size_t k = stop; k > n; --k) {
    const long double h = static_cast<long double>(k) - shift;
    acc += 1.0L / (h * h);
  }
  const long double a = static_cast<long double>(stop + 1) - shift;
  acc += 1.0L / a + 0.5L / (a * a) + 1.0L / (6.0L * a * a * a) - 1.0L / (30.0L * a * a * a * a * a);
  return static_cast<double>(acc / (static_cast<long double>(kPi) * kPi));
}

// Regularized lower incomplete gamma by its power series (x moderate).
inline double gamma_p_series(double a, double x) {
  if (x <= 0.0) return 0.0;
  long double term = 1.0L / a;
  long double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (term < sum * 1e-19L) break;
  }
  return static_cast<double>(sum * std::exp(static_cast<long double>(a * std::log(x) - x - std::lgamma(a))));
}

// Composite Simpson rule on [lo, hi] with n (even) panels.
template <class F>
double simpson(F&& f, double lo, double hi, int n = 20000) {
  const double h = (hi - lo) / n;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return acc * h / 3.0;
}

// Student-t density written out from the definition.
inline double t_density(double nu, double x) {
  return std::exp(std::lgamma(0.5 * (nu + 1)) - std::lgamma(0.5 * nu)) / std::sqrt(nu * kPi) *
         std::pow(1.0 + x * x / nu, -0.5 * (nu + 1));
}

inline std::shared_ptr<const hilbert_gauss::SpectralModel> share(hilbert_gauss::SpectralModel m) {
  return std::make_shared<const hilbert_gauss::SpectralModel>(std::move(m));
}

// Random orthogonal d x d matrix (QR of a Gaussian matrix).
inline Eigen::MatrixXd random_rotation(std::mt19937_64& gen, Eigen::Index d) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXd g(d, d);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = nd(gen);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
}

}  // namespace oracle
