#pragma once

// Point estimators for zeta, <b, zeta> and sigma^2 under Y ~ N(zeta, sigma^2 Q)
// with zeta in a Q-invariant subspace U, and their analytic risks.

#include "hilbert_gauss/spectral.hpp"

#include <cstddef>

namespace hilbert_gauss {

struct RiskReport {
  double bias;
  double variance;
  double risk;

  /// risk = variance + bias^2.
  static RiskReport from(double bias, double variance);
};

/// zeta_hat(y) = Pi_U y.
HVector est_mean(const HVector& y, const Subspace& u);

/// <b, Pi_U y>.
double est_functional(const HVector& b, const HVector& y, const Subspace& u);

/// tau = tr(Q (Pi_H - Pi_U)), the normalizer of the variance estimator.
/// Throws hypothesis_violated when it vanishes.
double residual_trace(const SpectralModel& model, const Subspace& u, Tail tail = Tail::automatic);

/// s2_hat(y) = ||y - Pi_U y||^2 / tau.
double est_variance(const HVector& y, const SpectralModel& model, const Subspace& u,
                    Tail tail = Tail::automatic);

/// E||Pi_U Y - zeta||^2 = sigma^2 tr(Q Pi_U).
double risk_mean(const SpectralModel& model, const Subspace& u, double sigma,
                 Tail tail = Tail::automatic);

/// Risk of Pi_V Y as an estimator of zeta when only V is observed:
/// variance sigma^2 tr(Q Pi_V), bias ||Pi_{V-perp} zeta||.
RiskReport risk_partial(const SpectralModel& model, const Subspace& v, const HVector& zeta,
                        double sigma);

/// R[zeta_hat_n] - R[zeta_hat] = sum_{k > n} (zeta_k^2 - sigma^2 lambda_k) over
/// the eigen-system of Q restricted to U. Index sets are walked in index
/// order, frames in descending eigenvalue order. With the tail included (U
/// an index set containing the tail) the untruncated remainder contributes
/// -sigma^2 * tail_trace, zeta having no coordinates there.
double learning_gap(const SpectralModel& model, const Subspace& u, const HVector& zeta, double sigma,
                    std::size_t cutoff, Tail tail = Tail::exclude);

/// E(s2_hat - sigma^2)^2 = 2 (sigma^2 ||T Q T||_{L2} / ||T Q T||_{L1})^2 with
/// T = Pi_H - Pi_U, over the truncated complement spectrum. At most 2 sigma^4.
double variance_est_risk(const SpectralModel& model, const Subspace& u, double sigma);

struct GaussMarkovVariances {
  double best;        // sigma^2 <Q Pi_U b, Pi_U b>
  double competitor;  // sigma^2 <Q c, c>
};

/// Variances of <b, zeta_hat(Y)> and of another unbiased linear estimator
/// <c, Y>. Unbiasedness requires Pi_U c = Pi_U b; violations throw
/// unbiasedness_violated rather than being projected away.
GaussMarkovVariances gm_variances(const HVector& b, const HVector& c, const SpectralModel& model,
                                  const Subspace& u, double sigma);

/// Risk of the diagonal linear estimator (t_k y_k)_k for zeta:
/// variance sigma^2 sum t_k^2 lambda_k, bias ||(T - I) zeta||.
RiskReport diagonal_estimator_risk(const SpectralModel& model, const Eigen::VectorXd& weights,
                                   const HVector& zeta, double sigma);

}  // namespace hilbert_gauss
