#pragma once

// Analytic covariance models on L^2([0,1]) and pointwise evaluation of their
// eigenfunctions.
//
//   Wiener process   k(s,t) = min(s,t)        lambda_k = 1 / ((k - 1/2)^2 pi^2)
//                                              e_k(t)   = sqrt(2) sin((k - 1/2) pi t)
//   Brownian bridge  k(s,t) = min(s,t) - s t  lambda_k = 1 / (k^2 pi^2)
//                                              e_k(t)   = sqrt(2) sin(k pi t)
//
// Traces: 1/2 for the Wiener process and 1/6 for the bridge.

#include "hilbert_gauss/spectral.hpp"

#include <vector>

namespace hilbert_gauss {

/// Strictly increasing evaluation points in [0, 1].
class Grid {
 public:
  explicit Grid(std::vector<double> points);
  /// `count` equispaced points including both endpoints (count >= 2).
  static Grid uniform(std::size_t count);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<double>& points() const noexcept { return points_; }
  double operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<double> points_;
};

SpectralModel wiener_model(std::size_t dim);
SpectralModel bridge_model(std::size_t dim);
SpectralModel custom_model(std::vector<double> eigenvalues, double tail_trace = 0.0);

/// Exact value of the kernel whose truncated Mercer sum `kernel` computes.
double analytic_kernel(Basis basis, double s, double t);

/// e_{mode+1}(t); throws unsupported for abstract models.
double eval_basis(const SpectralModel& model, std::size_t mode, double t);
/// sum_k y_k e_k(t) at each grid point.
std::vector<double> eval_vector(const SpectralModel& model, const HVector& y, const Grid& grid);
/// Truncated Mercer sum sum_k lambda_k e_k(s) e_k(t).
double kernel(const SpectralModel& model, double s, double t);

/// Coordinates <y, e_k> of a sampled trajectory by trapezoidal quadrature.
HVector project_trajectory(const SpectralModel& model, const Grid& grid,
                           const std::vector<double>& values);

}  // namespace hilbert_gauss
