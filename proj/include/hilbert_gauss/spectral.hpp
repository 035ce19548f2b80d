#pragma once

// Truncated spectral representation of a separable Hilbert space H with a
// trace-class covariance operator Q. Elements of H are stored as coordinates
// in the eigenbasis (e_k) of Q, so Q acts diagonally.
//
// Mode indices are 0-based in the C++ API: coordinate i carries e_{i+1}.

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hilbert_gauss {

enum class Basis { wiener, bridge, abstract };

const char* to_string(Basis basis) noexcept;
Basis basis_from_string(const std::string& name);

/// Eigen-system (lambda_k) of Q truncated at `dim` modes, plus the analytic
/// remainder sum_{k > dim} lambda_k when it is known.
class SpectralModel {
 public:
  SpectralModel(std::vector<double> eigenvalues, double tail_trace, Basis basis);

  std::size_t dim() const noexcept { return eigenvalues_.size(); }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  double eigenvalue(std::size_t i) const { return eigenvalues_.at(i); }
  double sqrt_eigenvalue(std::size_t i) const { return sqrt_eigenvalues_[i]; }
  double tail_trace() const noexcept { return tail_trace_; }
  Basis basis() const noexcept { return basis_; }
  bool is_analytic() const noexcept { return basis_ != Basis::abstract; }

  /// Compensated sum of the stored eigenvalues.
  double truncated_trace() const noexcept { return truncated_trace_; }
  double total_trace() const noexcept { return truncated_trace_ + tail_trace_; }
  double max_eigenvalue() const noexcept { return max_eigenvalue_; }

 private:
  std::vector<double> eigenvalues_;
  std::vector<double> sqrt_eigenvalues_;
  double tail_trace_;
  Basis basis_;
  double truncated_trace_ = 0.0;
  double max_eigenvalue_ = 0.0;
};

/// Element of H as its coordinates <y, e_k>.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::size_t dim) : coeffs_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim))) {}
  explicit HVector(Eigen::VectorXd coeffs);
  HVector(std::initializer_list<double> coeffs);

  static HVector unit(std::size_t dim, std::size_t index);

  std::size_t size() const noexcept { return static_cast<std::size_t>(coeffs_.size()); }
  double operator[](std::size_t i) const { return coeffs_[static_cast<Eigen::Index>(i)]; }
  double& operator[](std::size_t i) { return coeffs_[static_cast<Eigen::Index>(i)]; }
  const Eigen::VectorXd& coeffs() const noexcept { return coeffs_; }
  Eigen::VectorXd& coeffs() noexcept { return coeffs_; }

  HVector& operator+=(const HVector& other);
  HVector& operator-=(const HVector& other);
  HVector& operator*=(double scale);

  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend HVector operator-(HVector a, const HVector& b) { return a -= b; }
  friend HVector operator*(HVector a, double s) { return a *= s; }
  friend HVector operator*(double s, HVector a) { return a *= s; }

 private:
  Eigen::VectorXd coeffs_;
};

/// Q-invariant closed subspace of H.
///
/// Three representations:
///  - index_set: span of the listed eigenvectors; `includes_tail` adds every
///    mode beyond the truncation (this is what complements of index sets are).
///  - frame: span of finitely many orthonormal columns (N x r), validated to
///    be Q-invariant at construction.
///  - frame_complement: orthogonal complement of a frame, tail included.
class Subspace {
 public:
  enum class Kind { index_set, frame, frame_complement };

  /// Coordinate subspace spanned by e_{i+1}, i in `indices`. Indices are
  /// sorted; duplicates and out-of-range entries are rejected.
  static Subspace indices(std::size_t dim, std::vector<std::size_t> indices);
  static Subspace none(std::size_t dim) { return indices(dim, {}); }
  /// All truncated modes (no tail).
  static Subspace all(std::size_t dim);

  /// Orthonormal frame; throws not_invariant / invalid_argument when the
  /// Gram matrix is not the identity or the span is not Q-invariant.
  static Subspace frame(const SpectralModel& model, Eigen::MatrixXd columns);

  /// Span of arbitrary linearly independent columns. Coordinate-aligned
  /// spans are returned as index sets, everything else as a frame.
  static Subspace span(const SpectralModel& model, const Eigen::MatrixXd& columns);

  Kind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::size_t>& index_list() const;
  bool includes_tail() const noexcept { return tail_; }
  const Eigen::MatrixXd& frame_columns() const;

  /// Dimension of the part of the subspace that lives in the truncation.
  std::size_t truncated_rank() const noexcept;
  /// Finite-dimensional in the untruncated space.
  bool is_finite() const noexcept;
  bool contains_index(std::size_t i) const;

  Subspace complement() const;

  /// Columns of an orthonormal basis (finite subspaces only).
  Eigen::MatrixXd basis_matrix() const;

 private:
  Subspace() = default;

  Kind kind_ = Kind::index_set;
  std::size_t dim_ = 0;
  std::vector<std::size_t> indices_;
  Eigen::VectorXd mask_;
  bool tail_ = false;
  Eigen::MatrixXd frame_;
};

/// Whether the analytic tail trace is added to traces over complements.
/// `automatic` includes it for analytic models on index-set subspaces.
enum class Tail { automatic, include, exclude };

bool resolve_tail(const SpectralModel& model, const Subspace& s, Tail tail);

double inner(const HVector& u, const HVector& v);
double norm_sq(const HVector& u);
HVector project(const HVector& y, const Subspace& s);

HVector apply_q(const SpectralModel& model, const HVector& u);
/// <Q u, v>
double q_form(const SpectralModel& model, const HVector& u, const HVector& v);

/// tr(Q Pi_S). The tail trace is added when S contains the tail and the
/// policy resolves to include it.
double trace_q_on(const SpectralModel& model, const Subspace& s, Tail tail = Tail::exclude);
/// ||Pi_S Q Pi_S||_{L2}^2 over the truncated modes.
double hs_norm_sq_on(const SpectralModel& model, const Subspace& s);
/// ||Q Pi_S||; throws empty_subspace when S has no truncated modes.
double sup_eig_on(const SpectralModel& model, const Subspace& s);
/// dim ker(sup_eig_on(S) - Q Pi_S), eigenvalues compared with a relative tolerance.
std::size_t top_multiplicity(const SpectralModel& model, const Subspace& s,
                             double rel_tol = 1e-12);
/// dim ran(Q Pi_S) for finite S.
std::size_t rank_on(const SpectralModel& model, const Subspace& s);

/// Eigenvalues of Q restricted to S (truncated part), descending.
std::vector<double> spectrum_on(const SpectralModel& model, const Subspace& s);

/// Eigenvectors of Q restricted to a finite S, paired with their eigenvalues.
struct EigenFrame {
  std::vector<double> values;
  Eigen::MatrixXd vectors;  // N x r, column j belongs to values[j]
};
EigenFrame eigen_frame_on(const SpectralModel& model, const Subspace& s);

/// Eigenspace of the largest eigenvalue of Q restricted to S.
Subspace top_eigenspace(const SpectralModel& model, const Subspace& s, double rel_tol = 1e-12);

/// U0-perp intersected with U, for U0 contained in U (both finite).
Subspace relative_complement(const SpectralModel& model, const Subspace& u, const Subspace& u0);

/// ||(I - P) Q P|| for the orthogonal projection P onto the orthonormal columns.
double invariance_defect(const SpectralModel& model, const Eigen::MatrixXd& frame);

/// Orthonormal basis of span(columns) by column-pivoted Householder QR. Columns
/// whose pivot falls below rel_threshold * max|R_ii| are treated as dependent;
/// the returned matrix has one column per numerically independent direction.
Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& columns, double rel_threshold = 1e-12);

}  // namespace hilbert_gauss
