#include "hilbert_gauss/estimators.hpp"

#include "hilbert_gauss/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hilbert_gauss {

namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::invalid_argument, "sigma must be positive");
  }
}

void require_dim(std::size_t got, std::size_t want) {
  if (got != want) throw Error(ErrorCode::dimension_mismatch, "vector length differs from model truncation");
}

}  // namespace

RiskReport RiskReport::from(double bias, double variance) {
  return {bias, variance, variance + bias * bias};
}

HVector est_mean(const HVector& y, const Subspace& u) { return project(y, u); }

double est_functional(const HVector& b, const HVector& y, const Subspace& u) {
  return inner(b, project(y, u));
}

double residual_trace(const SpectralModel& model, const Subspace& u, Tail tail) {
  const Subspace comp = u.complement();
  const double tau = trace_q_on(model, comp, tail);
  if (!(tau > 0.0)) {
    throw Error(ErrorCode::hypothesis_violated, "tr(Q(Pi_H - Pi_U)) vanishes");
  }
  return tau;
}

double est_variance(const HVector& y, const SpectralModel& model, const Subspace& u, Tail tail) {
  require_dim(y.size(), model.dim());
  const double tau = residual_trace(model, u, tail);
  return norm_sq(y - project(y, u)) / tau;
}

double risk_mean(const SpectralModel& model, const Subspace& u, double sigma, Tail tail) {
  require_sigma(sigma);
  return sigma * sigma * trace_q_on(model, u, tail);
}

RiskReport risk_partial(const SpectralModel& model, const Subspace& v, const HVector& zeta,
                        double sigma) {
  require_sigma(sigma);
  require_dim(zeta.size(), model.dim());
  const double bias = std::sqrt(norm_sq(zeta - project(zeta, v)));
  return RiskReport::from(bias, sigma * sigma * trace_q_on(model, v, Tail::exclude));
}

double learning_gap(const SpectralModel& model, const Subspace& u, const HVector& zeta, double sigma,
                    std::size_t cutoff, Tail tail) {
  require_sigma(sigma);
  require_dim(zeta.size(), model.dim());
  const double s2 = sigma * sigma;
  double gap = 0.0;
  std::size_t count = 0;
  if (u.kind() == Subspace::Kind::index_set) {
    const auto& idx = u.index_list();
    count = idx.size();
    if (cutoff > count) throw Error(ErrorCode::invalid_argument, "cutoff exceeds the number of modes in U");
    for (std::size_t j = cutoff; j < count; ++j) {
      const std::size_t k = idx[j];
      gap += zeta[k] * zeta[k] - s2 * model.eigenvalue(k);
    }
    if (resolve_tail(model, u, tail)) gap -= s2 * model.tail_trace();
    return gap;
  }
  const EigenFrame ef = eigen_frame_on(model, u);
  count = ef.values.size();
  if (cutoff > count) throw Error(ErrorCode::invalid_argument, "cutoff exceeds the number of modes in U");
  const Eigen::VectorXd coords = ef.vectors.transpose() * zeta.coeffs();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ef.values[a] > ef.values[b]; });
  for (std::size_t j = cutoff; j < count; ++j) {
    const double c = coords[static_cast<Eigen::Index>(order[j])];
    gap += c * c - s2 * ef.values[order[j]];
  }
  return gap;
}

double variance_est_risk(const SpectralModel& model, const Subspace& u, double sigma) {
  require_sigma(sigma);
  const std::vector<double> spec = spectrum_on(model, u.complement());
  double l1 = 0.0;
  double l2sq = 0.0;
  for (double v : spec) {
    l1 += v;
    l2sq += v * v;
  }
  if (!(l1 > 0.0)) throw Error(ErrorCode::hypothesis_violated, "Q(Pi_H - Pi_U) vanishes");
  const double ratio = sigma * sigma * std::sqrt(l2sq) / l1;
  return 2.0 * ratio * ratio;
}

GaussMarkovVariances gm_variances(const HVector& b, const HVector& c, const SpectralModel& model,
                                  const Subspace& u, double sigma) {
  require_sigma(sigma);
  require_dim(b.size(), model.dim());
  require_dim(c.size(), model.dim());
  const HVector pb = project(b, u);
  const double gap = std::sqrt(norm_sq(project(c, u) - pb));
  if (gap > 1e-10 * std::max(1.0, std::sqrt(norm_sq(b)))) {
    throw Error(ErrorCode::unbiasedness_violated, "<c, Y> is biased: Pi_U c differs from Pi_U b");
  }
  const double s2 = sigma * sigma;
  return {s2 * q_form(model, pb, pb), s2 * q_form(model, c, c)};
}

RiskReport diagonal_estimator_risk(const SpectralModel& model, const Eigen::VectorXd& weights,
                                   const HVector& zeta, double sigma) {
  require_sigma(sigma);
  require_dim(static_cast<std::size_t>(weights.size()), model.dim());
  require_dim(zeta.size(), model.dim());
  double variance = 0.0;
  double bias_sq = 0.0;
  for (std::size_t k = 0; k < model.dim(); ++k) {
    const double t = weights[static_cast<Eigen::Index>(k)];
    variance += t * t * model.eigenvalue(k);
    const double miss = (t - 1.0) * zeta[k];
    bias_sq += miss * miss;
  }
  return RiskReport::from(std::sqrt(bias_sq), sigma * sigma * variance);
}

}  // namespace hilbert_gauss
