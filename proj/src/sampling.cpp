#include "hilbert_gauss/sampling.hpp"

#include "hilbert_gauss/error.hpp"

#include <cmath>

namespace hilbert_gauss {

GaussianLaw::GaussianLaw(std::shared_ptr<const SpectralModel> model, HVector mean, double sigma,
                         std::optional<Subspace> subspace)
    : model_(std::move(model)), mean_(std::move(mean)), sigma_(sigma), subspace_(std::move(subspace)) {
  if (!model_) throw Error(ErrorCode::invalid_argument, "law needs a spectral model");
  if (mean_.size() != model_->dim()) {
    throw Error(ErrorCode::dimension_mismatch, "mean length differs from model truncation");
  }
  if (!(sigma_ > 0.0) || !std::isfinite(sigma_)) {
    throw Error(ErrorCode::invalid_argument, "sigma must be positive");
  }
  if (subspace_) {
    if (subspace_->dim() != model_->dim()) {
      throw Error(ErrorCode::dimension_mismatch, "subspace truncation differs from model");
    }
    const double off = std::sqrt(norm_sq(mean_ - project(mean_, *subspace_)));
    if (off > 1e-10 * std::max(1.0, std::sqrt(norm_sq(mean_)))) {
      throw Error(ErrorCode::invalid_argument, "mean does not lie in the attached subspace");
    }
  }
}

void sample_into(const GaussianLaw& law, RandomSource& rng, HVector& out) {
  const auto& model = law.model();
  const std::size_t n = model.dim();
  if (out.size() != n) out = HVector(n);
  const auto& mean = law.mean();
  const double sigma = law.sigma();
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = mean[i] + sigma * model.sqrt_eigenvalue(i) * rng.normal();
  }
}

HVector sample(const GaussianLaw& law, RandomSource& rng) {
  HVector out(law.model().dim());
  sample_into(law, rng, out);
  return out;
}

Moments norm_sq_moments(const GaussianLaw& law, Tail tail) {
  const auto& model = law.model();
  const double s2 = law.sigma() * law.sigma();
  const bool use_tail = tail == Tail::include || (tail == Tail::automatic && model.is_analytic());
  const double trace = model.truncated_trace() + (use_tail ? model.tail_trace() : 0.0);
  const double hs = hs_norm_sq_on(model, Subspace::all(model.dim()));
  const double shifted = q_form(model, law.mean(), law.mean());
  return {s2 * trace + norm_sq(law.mean()), 2.0 * (s2 * s2 * hs + 2.0 * s2 * shifted)};
}

Moments transformed_norm_sq_moments(const GaussianLaw& law, const Subspace& s, Tail tail) {
  const auto& model = law.model();
  const double s2 = law.sigma() * law.sigma();
  const HVector projected_mean = project(law.mean(), s);
  const double mean = s2 * trace_q_on(model, s, tail) + norm_sq(projected_mean);
  const double variance =
      2.0 * (s2 * s2 * hs_norm_sq_on(model, s) + 2.0 * s2 * q_form(model, projected_mean, projected_mean));
  return {mean, variance};
}

NoiseDecomposition noise_decomposition(const SpectralModel& model, const Subspace& u,
                                       const std::optional<Subspace>& u0) {
  const Subspace comp = u.complement();
  if (comp.truncated_rank() == 0) {
    throw Error(ErrorCode::hypothesis_violated, "Q(Pi_H - Pi_U) vanishes: U exhausts the truncation");
  }
  NoiseDecomposition out{};
  out.lambda = sup_eig_on(model, comp);
  if (!(out.lambda > 0.0)) {
    throw Error(ErrorCode::hypothesis_violated, "Q(Pi_H - Pi_U) vanishes");
  }
  out.n = top_multiplicity(model, comp);
  if (u0) {
    const Subspace d = relative_complement(model, u, *u0);
    if (d.truncated_rank() == 0) {
      throw Error(ErrorCode::hypothesis_violated, "Q(Pi_U - Pi_U0) vanishes: U0 equals U");
    }
    const double mu = sup_eig_on(model, d);
    if (!(mu > 0.0)) throw Error(ErrorCode::hypothesis_violated, "Q(Pi_U - Pi_U0) vanishes");
    out.mu = mu;
    out.m = rank_on(model, d);
  }
  return out;
}

DominatingOperator::DominatingOperator(const SpectralModel& model, const Subspace& d) {
  const EigenFrame ef = eigen_frame_on(model, d);
  const double threshold = 1e-12 * model.max_eigenvalue();
  std::vector<Eigen::Index> keep;
  for (std::size_t j = 0; j < ef.values.size(); ++j) {
    if (ef.values[j] > threshold) {
      keep.push_back(static_cast<Eigen::Index>(j));
      mu_ = std::max(mu_, ef.values[j]);
    }
  }
  if (keep.empty()) throw Error(ErrorCode::hypothesis_violated, "Q vanishes on the subspace");
  directions_.resize(ef.vectors.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    directions_.col(static_cast<Eigen::Index>(j)) = ef.vectors.col(keep[j]);
    weights_.push_back(mu_ / ef.values[static_cast<std::size_t>(keep[j])]);
  }
}

double DominatingOperator::norm_sq(const HVector& y) const {
  if (static_cast<Eigen::Index>(y.size()) != directions_.rows()) {
    throw Error(ErrorCode::dimension_mismatch, "vector length differs from operator domain");
  }
  const Eigen::VectorXd coords = directions_.transpose() * y.coeffs();
  double acc = 0.0;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    const double c = coords[static_cast<Eigen::Index>(j)];
    acc += weights_[j] * c * c;
  }
  return acc;
}

}  // namespace hilbert_gauss
