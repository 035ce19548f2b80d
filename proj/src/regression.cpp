#include "hilbert_gauss/regression.hpp"

#include "hilbert_gauss/error.hpp"

#include <Eigen/Eigenvalues>

namespace hilbert_gauss {

namespace {

Eigen::MatrixXd checked_gram(const SpectralModel& model, const Eigen::MatrixXd& columns) {
  if (static_cast<std::size_t>(columns.rows()) != model.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "design columns differ from model truncation");
  }
  if (columns.cols() == 0) throw Error(ErrorCode::invalid_argument, "design needs at least one column");
  if (!columns.allFinite()) throw Error(ErrorCode::invalid_argument, "design has non-finite entries");
  Eigen::MatrixXd gram = columns.transpose() * columns;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  const double hi = es.eigenvalues().maxCoeff();
  const double lo = es.eigenvalues().minCoeff();
  if (!(hi > 0.0) || !(lo > 1e-12 * hi)) {
    throw Error(ErrorCode::rank_deficient, "design columns are linearly dependent; A is not injective");
  }
  return gram;
}

}  // namespace

DesignOperator::DesignOperator(const SpectralModel& model, Eigen::MatrixXd columns)
    : columns_(std::move(columns)),
      gram_(checked_gram(model, columns_)),
      gram_ldlt_(gram_),
      qr_(columns_),
      range_(Subspace::span(model, columns_)) {}

HVector DesignOperator::apply(const Eigen::VectorXd& beta) const {
  if (beta.size() != columns_.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "parameter length differs from design");
  }
  return HVector(Eigen::VectorXd(columns_ * beta));
}

Subspace range_subspace(const DesignOperator& a) { return a.range(); }

Eigen::VectorXd lse(const DesignOperator& a, const HVector& y) {
  if (static_cast<Eigen::Index>(y.size()) != a.columns().rows()) {
    throw Error(ErrorCode::dimension_mismatch, "observation length differs from design");
  }
  return a.qr().solve(y.coeffs());
}

HVector pullback_functional(const DesignOperator& a, const Eigen::VectorXd& c) {
  if (c.size() != a.columns().cols()) {
    throw Error(ErrorCode::dimension_mismatch, "functional length differs from design");
  }
  return a.apply(a.solve_gram(c));
}

Interval ci_beta_known(const Eigen::VectorXd& c, const DesignOperator& a, const HVector& y,
                       const SpectralModel& model, double sigma, double alpha) {
  return ci_known(pullback_functional(a, c), y, model, a.range(), sigma, alpha);
}

Interval ci_beta_unknown(const Eigen::VectorXd& c, const DesignOperator& a, const HVector& y,
                         const SpectralModel& model, double alpha, Tail tail) {
  return ci_unknown(pullback_functional(a, c), y, model, a.range(), alpha, tail);
}

TestResult test_beta(const HVector& y, const DesignOperator& a, const Eigen::MatrixXd& g0_columns,
                     const SpectralModel& model, double alpha) {
  if (g0_columns.rows() != a.columns().cols()) {
    throw Error(ErrorCode::dimension_mismatch, "G0 columns differ from the parameter dimension");
  }
  const Eigen::Index p0 = orthonormal_basis(g0_columns).cols();
  if (p0 == 0) throw Error(ErrorCode::invalid_argument, "G0 must be nonzero");
  if (p0 != g0_columns.cols()) throw Error(ErrorCode::rank_deficient, "G0 columns are linearly dependent");
  if (p0 >= a.columns().cols()) {
    throw Error(ErrorCode::hypothesis_violated, "G0 = G leaves Q(Pi_U - Pi_U0) = 0");
  }
  const Subspace u0 = Subspace::span(model, a.columns() * g0_columns);
  return test_subspace(y, model, a.range(), u0, alpha);
}

}  // namespace hilbert_gauss
