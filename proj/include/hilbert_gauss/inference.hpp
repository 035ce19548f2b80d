#pragma once

// Confidence intervals for <b, zeta> with known and unknown sigma, and the
// F-type test of zeta in U0 against zeta in U.

#include "hilbert_gauss/spectral.hpp"

#include <cstddef>

namespace hilbert_gauss {

struct Interval {
  double center;
  double half_width;
  double level;  // 1 - alpha

  double lower() const noexcept { return center - half_width; }
  double upper() const noexcept { return center + half_width; }
  bool contains(double x) const noexcept { return lower() <= x && x <= upper(); }
};

/// <b, zeta_hat(y)> +- z_{1-alpha/2} sigma sqrt(<Q b, Pi_U b>).
/// Throws degenerate_functional when <Q b, Pi_U b> = 0 (b effectively in U-perp).
Interval ci_known(const HVector& b, const HVector& y, const SpectralModel& model, const Subspace& u,
                  double sigma, double alpha);

struct UnknownSigmaParams {
  double tau;     // tr(Q (Pi_H - Pi_U))
  double lambda;  // ||Q (Pi_H - Pi_U)||
  std::size_t n;  // multiplicity of lambda
};

UnknownSigmaParams ci_params_unknown(const SpectralModel& model, const Subspace& u,
                                     Tail tail = Tail::automatic);

/// <b, zeta_hat(y)> +- sqrt(tau / (lambda n)) t_{n,1-alpha/2} s_hat(y) sqrt(<Q b, Pi_U b>).
/// Coverage is at least 1 - alpha. tau cancels against the one inside s_hat,
/// so the tail convention does not move the interval.
Interval ci_unknown(const HVector& b, const HVector& y, const SpectralModel& model, const Subspace& u,
                    double alpha, Tail tail = Tail::automatic);

struct TestParams {
  double lambda;  // ||Q (Pi_H - Pi_U)||
  double mu;      // ||Q (Pi_U - Pi_U0)||
  std::size_t n;  // multiplicity of lambda
  std::size_t m;  // rank of Q (Pi_U - Pi_U0)

  /// n lambda / (m mu)
  double prefactor() const noexcept;
};

TestParams test_params(const SpectralModel& model, const Subspace& u, const Subspace& u0);

struct TestResult {
  double statistic;
  double threshold;
  bool reject;
  TestParams params;
};

/// Rejects zeta in U0 when
///   (n lambda / (m mu)) ||Pi_U y - Pi_U0 y||^2 / ||y - Pi_U y||^2 >= F_{m,n,1-alpha}.
/// Level at most alpha. A zero residual throws zero_residual.
TestResult test_subspace(const HVector& y, const SpectralModel& model, const Subspace& u,
                         const Subspace& u0, double alpha);

}  // namespace hilbert_gauss
