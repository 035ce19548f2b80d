#pragma once

// Least squares with an injective design A : G -> H, G = R^p, given by the
// column images A g_j in the eigenbasis of Q. U = ran A must be Q-invariant.

#include "hilbert_gauss/inference.hpp"
#include "hilbert_gauss/spectral.hpp"

#include <Eigen/Dense>

namespace hilbert_gauss {

class DesignOperator {
 public:
  /// Throws rank_deficient when the Gram matrix is numerically singular and
  /// not_invariant when ran A is not Q-invariant.
  DesignOperator(const SpectralModel& model, Eigen::MatrixXd columns);

  std::size_t params() const noexcept { return static_cast<std::size_t>(columns_.cols()); }
  const Eigen::MatrixXd& columns() const noexcept { return columns_; }
  const Eigen::MatrixXd& gram() const noexcept { return gram_; }
  const Subspace& range() const noexcept { return range_; }

  HVector apply(const Eigen::VectorXd& beta) const;
  Eigen::VectorXd solve_gram(const Eigen::VectorXd& rhs) const { return gram_ldlt_.solve(rhs); }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr() const noexcept { return qr_; }

 private:
  Eigen::MatrixXd columns_;
  Eigen::MatrixXd gram_;
  Eigen::LDLT<Eigen::MatrixXd> gram_ldlt_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
  Subspace range_;
};

Subspace range_subspace(const DesignOperator& a);

/// beta_hat = A^{-1} Pi_U y, the unique minimizer of ||y - A beta||.
Eigen::VectorXd lse(const DesignOperator& a, const HVector& y);

/// b = A Gram^{-1} c, the element of ran A with <b, A g> = <c, g> for all g.
HVector pullback_functional(const DesignOperator& a, const Eigen::VectorXd& c);

Interval ci_beta_known(const Eigen::VectorXd& c, const DesignOperator& a, const HVector& y,
                       const SpectralModel& model, double sigma, double alpha);
Interval ci_beta_unknown(const Eigen::VectorXd& c, const DesignOperator& a, const HVector& y,
                         const SpectralModel& model, double alpha, Tail tail = Tail::automatic);

/// Test of beta in G0 = span(g0_columns) (p x p0, 0 < p0 < p) through
/// U0 = A(G0).
TestResult test_beta(const HVector& y, const DesignOperator& a, const Eigen::MatrixXd& g0_columns,
                     const SpectralModel& model, double alpha);

}  // namespace hilbert_gauss
