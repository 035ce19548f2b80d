#include "hilbert_gauss/inference.hpp"

#include "hilbert_gauss/distributions.hpp"
#include "hilbert_gauss/error.hpp"
#include "hilbert_gauss/estimators.hpp"
#include "hilbert_gauss/sampling.hpp"

#include <cmath>

namespace hilbert_gauss {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::invalid_argument, "alpha must lie in (0, 1)");
}

void require_dims(const SpectralModel& model, const HVector& b, const HVector& y) {
  if (b.size() != model.dim() || y.size() != model.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "vector length differs from model truncation");
  }
}

// <Q b, Pi_U b>, the variance factor of <b, zeta_hat(Y)>.
double functional_variance(const SpectralModel& model, const HVector& b, const Subspace& u) {
  const HVector pb = project(b, u);
  const double q = q_form(model, pb, pb);
  if (!(q > 0.0)) {
    throw Error(ErrorCode::degenerate_functional, "<Q b, Pi_U b> vanishes; b lies in U-perp");
  }
  return q;
}

}  // namespace

Interval ci_known(const HVector& b, const HVector& y, const SpectralModel& model, const Subspace& u,
                  double sigma, double alpha) {
  require_alpha(alpha);
  require_dims(model, b, y);
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw Error(ErrorCode::invalid_argument, "sigma must be positive");
  const double q = functional_variance(model, b, u);
  const double z = norm_quantile(1.0 - 0.5 * alpha);
  return {est_functional(b, y, u), z * sigma * std::sqrt(q), 1.0 - alpha};
}

UnknownSigmaParams ci_params_unknown(const SpectralModel& model, const Subspace& u, Tail tail) {
  const NoiseDecomposition nd = noise_decomposition(model, u);
  return {residual_trace(model, u, tail), nd.lambda, nd.n};
}

Interval ci_unknown(const HVector& b, const HVector& y, const SpectralModel& model, const Subspace& u,
                    double alpha, Tail tail) {
  require_alpha(alpha);
  require_dims(model, b, y);
  const double q = functional_variance(model, b, u);
  const UnknownSigmaParams p = ci_params_unknown(model, u, tail);
  const double nn = static_cast<double>(p.n);
  const double s_hat = std::sqrt(est_variance(y, model, u, tail));
  const double half = std::sqrt(p.tau / (p.lambda * nn)) * t_quantile(nn, 1.0 - 0.5 * alpha) * s_hat *
                      std::sqrt(q);
  return {est_functional(b, y, u), half, 1.0 - alpha};
}

double TestParams::prefactor() const noexcept {
  return static_cast<double>(n) * lambda / (static_cast<double>(m) * mu);
}

TestParams test_params(const SpectralModel& model, const Subspace& u, const Subspace& u0) {
  const NoiseDecomposition nd = noise_decomposition(model, u, u0);
  return {nd.lambda, *nd.mu, nd.n, *nd.m};
}

TestResult test_subspace(const HVector& y, const SpectralModel& model, const Subspace& u,
                         const Subspace& u0, double alpha) {
  require_alpha(alpha);
  if (y.size() != model.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "vector length differs from model truncation");
  }
  const TestParams p = test_params(model, u, u0);
  const HVector pu = project(y, u);
  const double residual = norm_sq(y - pu);
  if (!(residual > 0.0)) {
    throw Error(ErrorCode::zero_residual, "||y - Pi_U y|| = 0; the statistic is undefined");
  }
  const double between = norm_sq(pu - project(y, u0));
  const double statistic = p.prefactor() * between / residual;
  const double threshold =
      f_quantile(static_cast<double>(p.m), static_cast<double>(p.n), 1.0 - alpha);
  return {statistic, threshold, statistic >= threshold, p};
}

}  // namespace hilbert_gauss
