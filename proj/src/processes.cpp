#include "hilbert_gauss/processes.hpp"

#include "hilbert_gauss/error.hpp"

#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <numbers>

namespace hilbert_gauss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSq = kPi * kPi;

// Angular frequency of e_{mode+1}.
double frequency(Basis basis, std::size_t mode) {
  const double k = static_cast<double>(mode) + 1.0;
  switch (basis) {
    case Basis::wiener: return (k - 0.5) * kPi;
    case Basis::bridge: return k * kPi;
    case Basis::abstract: break;
  }
  throw Error(ErrorCode::unsupported, "abstract model has no eigenfunctions to evaluate");
}

void require_analytic(const SpectralModel& model) {
  if (!model.is_analytic()) {
    throw Error(ErrorCode::unsupported, "abstract model has no eigenfunctions to evaluate");
  }
}

void require_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "evaluation point outside [0, 1]");
  }
}

}  // namespace

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::invalid_argument, "grid must be nonempty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    require_unit_interval(points_[i]);
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw Error(ErrorCode::invalid_argument, "grid points must be strictly increasing");
    }
  }
}

Grid Grid::uniform(std::size_t count) {
  if (count < 2) throw Error(ErrorCode::invalid_argument, "uniform grid needs at least two points");
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = static_cast<double>(i) / static_cast<double>(count - 1);
  }
  pts.back() = 1.0;
  return Grid(std::move(pts));
}

SpectralModel wiener_model(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::invalid_argument, "truncation must be positive");
  std::vector<double> eigs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double h = static_cast<double>(i) + 0.5;
    eigs[i] = 1.0 / (h * h * kPiSq);
  }
  // sum_{k > N} 1/(k - 1/2)^2 = trigamma(N + 1/2)
  const double tail = boost::math::trigamma(static_cast<double>(dim) + 0.5) / kPiSq;
  return SpectralModel(std::move(eigs), tail, Basis::wiener);
}

SpectralModel bridge_model(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::invalid_argument, "truncation must be positive");
  std::vector<double> eigs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double k = static_cast<double>(i) + 1.0;
    eigs[i] = 1.0 / (k * k * kPiSq);
  }
  // sum_{k > N} 1/k^2 = trigamma(N + 1)
  const double tail = boost::math::trigamma(static_cast<double>(dim) + 1.0) / kPiSq;
  return SpectralModel(std::move(eigs), tail, Basis::bridge);
}

SpectralModel custom_model(std::vector<double> eigenvalues, double tail_trace) {
  return SpectralModel(std::move(eigenvalues), tail_trace, Basis::abstract);
}

double analytic_kernel(Basis basis, double s, double t) {
  switch (basis) {
    case Basis::wiener: return std::min(s, t);
    case Basis::bridge: return std::min(s, t) - s * t;
    case Basis::abstract: break;
  }
  throw Error(ErrorCode::unsupported, "abstract model has no analytic kernel");
}

double eval_basis(const SpectralModel& model, std::size_t mode, double t) {
  require_analytic(model);
  require_unit_interval(t);
  if (mode >= model.dim()) throw Error(ErrorCode::invalid_argument, "mode beyond truncation");
  return std::numbers::sqrt2 * std::sin(frequency(model.basis(), mode) * t);
}

std::vector<double> eval_vector(const SpectralModel& model, const HVector& y, const Grid& grid) {
  require_analytic(model);
  if (y.size() != model.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "vector length differs from model truncation");
  }
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < model.dim(); ++i) {
      if (y[i] != 0.0) acc += y[i] * std::sin(frequency(model.basis(), i) * grid[j]);
    }
    out[j] = std::numbers::sqrt2 * acc;
  }
  return out;
}

double kernel(const SpectralModel& model, double s, double t) {
  require_analytic(model);
  require_unit_interval(s);
  require_unit_interval(t);
  double acc = 0.0;
  for (std::size_t i = 0; i < model.dim(); ++i) {
    const double w = frequency(model.basis(), i);
    acc += model.eigenvalue(i) * std::sin(w * s) * std::sin(w * t);
  }
  return 2.0 * acc;
}

HVector project_trajectory(const SpectralModel& model, const Grid& grid,
                           const std::vector<double>& values) {
  require_analytic(model);
  if (values.size() != grid.size()) {
    throw Error(ErrorCode::dimension_mismatch, "trajectory length differs from grid");
  }
  if (grid.size() < 2) throw Error(ErrorCode::invalid_argument, "quadrature needs two points");
  HVector out(model.dim());
  for (std::size_t i = 0; i < model.dim(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      const double h = grid[j + 1] - grid[j];
      acc += 0.5 * h * (values[j] * eval_basis(model, i, grid[j]) +
                        values[j + 1] * eval_basis(model, i, grid[j + 1]));
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace hilbert_gauss
