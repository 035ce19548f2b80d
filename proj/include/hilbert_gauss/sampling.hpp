#pragma once

// Gaussian laws N(zeta, sigma^2 Q) on the truncated space, the series
// sampler Y = zeta + sigma sum_k sqrt(lambda_k) beta_k e_k, and the analytic
// moments of ||Y||^2 and ||T Y||^2.

#include "hilbert_gauss/random.hpp"
#include "hilbert_gauss/spectral.hpp"

#include <memory>
#include <optional>

namespace hilbert_gauss {

/// Parameter pair (zeta, sigma) with its model. When a subspace U is
/// attached, zeta must lie in U.
class GaussianLaw {
 public:
  GaussianLaw(std::shared_ptr<const SpectralModel> model, HVector mean, double sigma,
              std::optional<Subspace> subspace = std::nullopt);

  const SpectralModel& model() const noexcept { return *model_; }
  const std::shared_ptr<const SpectralModel>& model_ptr() const noexcept { return model_; }
  const HVector& mean() const noexcept { return mean_; }
  double sigma() const noexcept { return sigma_; }
  const std::optional<Subspace>& subspace() const noexcept { return subspace_; }

 private:
  std::shared_ptr<const SpectralModel> model_;
  HVector mean_;
  double sigma_;
  std::optional<Subspace> subspace_;
};

struct Moments {
  double mean;
  double variance;
};

/// Gamma-law parameters of the dominating noise norms: ||S(Y/sigma)||^2 is
/// Gamma(n/2, 1/(2 lambda)) and ||T(Y/sigma)||^2 is Gamma(m/2, 1/(2 mu)).
struct NoiseDecomposition {
  double lambda;
  std::size_t n;
  std::optional<double> mu;
  std::optional<std::size_t> m;
};

HVector sample(const GaussianLaw& law, RandomSource& rng);
/// Allocation-free variant for Monte Carlo loops; `out` is resized as needed.
void sample_into(const GaussianLaw& law, RandomSource& rng, HVector& out);

/// E||Y||^2 = sigma^2 tr Q + ||zeta||^2 and
/// Var||Y||^2 = 2 (sigma^4 ||Q||_{L2}^2 + 2 sigma^2 ||Q^{1/2} zeta||^2).
/// The tail trace enters the mean only.
Moments norm_sq_moments(const GaussianLaw& law, Tail tail = Tail::automatic);

/// The same identities for T = Pi_S.
Moments transformed_norm_sq_moments(const GaussianLaw& law, const Subspace& s,
                                    Tail tail = Tail::automatic);

/// lambda, n from Q on the complement of U; mu, m from Q on U minus U0.
/// Throws hypothesis_violated when either restricted operator vanishes.
NoiseDecomposition noise_decomposition(const SpectralModel& model, const Subspace& u,
                                       const std::optional<Subspace>& u0 = std::nullopt);

/// T y = sum_i sqrt(mu / lambda_i) <y, g_i> g_i over the eigenvectors g_i of Q
/// on a finite subspace D (lambda_i > 0), mu the largest lambda_i. Dominates
/// Pi_D coordinate-wise and makes ||T Y||^2 / sigma^2 a scaled chi-square.
class DominatingOperator {
 public:
  DominatingOperator(const SpectralModel& model, const Subspace& d);

  double mu() const noexcept { return mu_; }
  std::size_t rank() const noexcept { return weights_.size(); }
  double norm_sq(const HVector& y) const;

 private:
  Eigen::MatrixXd directions_;
  std::vector<double> weights_;
  double mu_ = 0.0;
};

}  // namespace hilbert_gauss
