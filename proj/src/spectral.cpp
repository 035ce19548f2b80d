#include "hilbert_gauss/spectral.hpp"

#include "hilbert_gauss/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace hilbert_gauss {

namespace {

using Index = Eigen::Index;

constexpr double kGramTol = 1e-10;
constexpr double kInvarianceTol = 1e-10;
constexpr double kSupportTol = 1e-14;

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + " (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

Eigen::Map<const Eigen::VectorXd> eigen_view(const SpectralModel& model) {
  return {model.eigenvalues().data(), static_cast<Index>(model.dim())};
}

// Frame^T Q Frame for an N x r frame.
Eigen::MatrixXd compressed_q(const SpectralModel& model, const Eigen::MatrixXd& frame) {
  return frame.transpose() * (eigen_view(model).asDiagonal() * frame);
}

std::vector<double> sorted_descending(const Eigen::VectorXd& values) {
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Rows on which a frame has non-negligible weight.
std::vector<Index> support_rows(const Eigen::MatrixXd& frame) {
  std::vector<Index> rows;
  const double scale = frame.size() == 0 ? 0.0 : frame.cwiseAbs().maxCoeff();
  for (Index i = 0; i < frame.rows(); ++i) {
    if (frame.cols() > 0 && frame.row(i).cwiseAbs().maxCoeff() > kSupportTol * scale) {
      rows.push_back(i);
    }
  }
  return rows;
}

// Spectral data of Q on the orthogonal complement of a frame: eigenvalues of
// untouched coordinates plus an eigen-decomposition of the complement inside
// the frame's support block.
struct ComplementBlock {
  std::vector<Index> block_rows;
  std::vector<Index> outside_rows;
  Eigen::MatrixXd block_basis;  // |B| x (|B| - r), orthonormal complement of the frame in R^B
  Eigen::VectorXd values;       // eigenvalues of block_basis^T Q_B block_basis, ascending
  Eigen::MatrixXd vectors;      // matching eigenvectors in block_basis coordinates
};

ComplementBlock complement_block(const SpectralModel& model, const Eigen::MatrixXd& frame) {
  ComplementBlock out;
  out.block_rows = support_rows(frame);
  std::vector<bool> in_block(model.dim(), false);
  for (Index i : out.block_rows) in_block[static_cast<std::size_t>(i)] = true;
  for (std::size_t i = 0; i < model.dim(); ++i) {
    if (!in_block[i]) out.outside_rows.push_back(static_cast<Index>(i));
  }

  const Index b = static_cast<Index>(out.block_rows.size());
  const Index r = frame.cols();
  Eigen::MatrixXd local(b, r);
  Eigen::VectorXd local_eigs(b);
  for (Index i = 0; i < b; ++i) {
    local.row(i) = frame.row(out.block_rows[static_cast<std::size_t>(i)]);
    local_eigs[i] = model.eigenvalue(static_cast<std::size_t>(out.block_rows[static_cast<std::size_t>(i)]));
  }
  if (b > r) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(local);
    Eigen::MatrixXd full = qr.householderQ() * Eigen::MatrixXd::Identity(b, b);
    out.block_basis = full.rightCols(b - r);
    Eigen::MatrixXd restricted = out.block_basis.transpose() * local_eigs.asDiagonal() * out.block_basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(restricted);
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
  } else {
    out.block_basis.resize(b, 0);
    out.values.resize(0);
    out.vectors.resize(0, 0);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SpectralModel

const char* to_string(Basis basis) noexcept {
  switch (basis) {
    case Basis::wiener: return "wiener";
    case Basis::bridge: return "bridge";
    case Basis::abstract: return "abstract";
  }
  return "abstract";
}

Basis basis_from_string(const std::string& name) {
  if (name == "wiener") return Basis::wiener;
  if (name == "bridge") return Basis::bridge;
  if (name == "abstract" || name == "custom") return Basis::abstract;
  throw Error(ErrorCode::invalid_argument, "unknown basis_id '" + name + "'");
}

SpectralModel::SpectralModel(std::vector<double> eigenvalues, double tail_trace, Basis basis)
    : eigenvalues_(std::move(eigenvalues)), tail_trace_(tail_trace), basis_(basis) {
  if (eigenvalues_.empty()) {
    throw Error(ErrorCode::invalid_argument, "spectral model needs at least one eigenvalue");
  }
  if (!(tail_trace_ >= 0.0) || !std::isfinite(tail_trace_)) {
    throw Error(ErrorCode::invalid_argument, "tail trace must be finite and nonnegative");
  }
  CompensatedSum sum;
  sqrt_eigenvalues_.reserve(eigenvalues_.size());
  for (double lambda : eigenvalues_) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
      throw Error(ErrorCode::invalid_argument, "eigenvalues must be finite and nonnegative");
    }
    sum.add(lambda);
    sqrt_eigenvalues_.push_back(std::sqrt(lambda));
    max_eigenvalue_ = std::max(max_eigenvalue_, lambda);
  }
  truncated_trace_ = sum.value();
}

// ---------------------------------------------------------------------------
// HVector

HVector::HVector(Eigen::VectorXd coeffs) : coeffs_(std::move(coeffs)) {
  if (!coeffs_.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "coefficients must be finite");
  }
}

HVector::HVector(std::initializer_list<double> coeffs)
    : HVector(Eigen::VectorXd::Map(coeffs.begin(), static_cast<Index>(coeffs.size()))) {}

HVector HVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw Error(ErrorCode::invalid_argument, "unit vector index out of range");
  }
  HVector v(dim);
  v[index] = 1.0;
  return v;
}

HVector& HVector::operator+=(const HVector& other) {
  require_same_dim(size(), other.size(), "vector addition");
  coeffs_ += other.coeffs_;
  return *this;
}

HVector& HVector::operator-=(const HVector& other) {
  require_same_dim(size(), other.size(), "vector subtraction");
  coeffs_ -= other.coeffs_;
  return *this;
}

HVector& HVector::operator*=(double scale) {
  coeffs_ *= scale;
  return *this;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::indices(std::size_t dim, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw Error(ErrorCode::invalid_argument, "duplicate index in subspace");
  }
  if (!indices.empty() && indices.back() >= dim) {
    throw Error(ErrorCode::invalid_argument,
                "subspace index " + std::to_string(indices.back()) + " exceeds truncation " +
                    std::to_string(dim));
  }
  Subspace s;
  s.kind_ = Kind::index_set;
  s.dim_ = dim;
  s.mask_ = Eigen::VectorXd::Zero(static_cast<Index>(dim));
  for (std::size_t i : indices) s.mask_[static_cast<Index>(i)] = 1.0;
  s.indices_ = std::move(indices);
  return s;
}

Subspace Subspace::all(std::size_t dim) {
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  return indices(dim, std::move(idx));
}

Subspace Subspace::frame(const SpectralModel& model, Eigen::MatrixXd columns) {
  require_same_dim(static_cast<std::size_t>(columns.rows()), model.dim(), "frame rows vs model dim");
  if (!columns.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "frame entries must be finite");
  }
  const Index r = columns.cols();
  if (r > 0) {
    const double gram_err =
        (columns.transpose() * columns - Eigen::MatrixXd::Identity(r, r)).cwiseAbs().maxCoeff();
    if (gram_err > kGramTol) {
      throw Error(ErrorCode::invalid_argument,
                  "frame is not orthonormal (Gram deviation " + std::to_string(gram_err) + ")");
    }
    const double defect = invariance_defect(model, columns);
    if (defect > kInvarianceTol * model.max_eigenvalue()) {
      throw Error(ErrorCode::not_invariant,
                  "||(I - P) Q P|| = " + std::to_string(defect));
    }
  }
  Subspace s;
  s.kind_ = Kind::frame;
  s.dim_ = model.dim();
  s.frame_ = std::move(columns);
  return s;
}

Subspace Subspace::span(const SpectralModel& model, const Eigen::MatrixXd& columns) {
  require_same_dim(static_cast<std::size_t>(columns.rows()), model.dim(), "span rows vs model dim");
  if (columns.cols() == 0) return none(model.dim());
  Eigen::MatrixXd basis = orthonormal_basis(columns);
  if (basis.cols() < columns.cols()) {
    throw Error(ErrorCode::rank_deficient, "spanning columns are linearly dependent");
  }
  const auto rows = support_rows(columns);
  if (rows.size() == static_cast<std::size_t>(basis.cols())) {
    std::vector<std::size_t> idx(rows.begin(), rows.end());
    return indices(model.dim(), std::move(idx));
  }
  return frame(model, std::move(basis));
}

const std::vector<std::size_t>& Subspace::index_list() const {
  if (kind_ != Kind::index_set) {
    throw Error(ErrorCode::unsupported, "index list requested from a frame subspace");
  }
  return indices_;
}

const Eigen::MatrixXd& Subspace::frame_columns() const {
  if (kind_ == Kind::index_set) {
    throw Error(ErrorCode::unsupported, "frame requested from an index-set subspace");
  }
  return frame_;
}

std::size_t Subspace::truncated_rank() const noexcept {
  switch (kind_) {
    case Kind::index_set: return indices_.size();
    case Kind::frame: return static_cast<std::size_t>(frame_.cols());
    case Kind::frame_complement: return dim_ - static_cast<std::size_t>(frame_.cols());
  }
  return 0;
}

bool Subspace::is_finite() const noexcept {
  return (kind_ == Kind::index_set && !tail_) || kind_ == Kind::frame;
}

bool Subspace::contains_index(std::size_t i) const {
  if (kind_ != Kind::index_set) {
    throw Error(ErrorCode::unsupported, "index membership on a frame subspace");
  }
  return i < dim_ && mask_[static_cast<Index>(i)] != 0.0;
}

Subspace Subspace::complement() const {
  Subspace s;
  s.dim_ = dim_;
  switch (kind_) {
    case Kind::index_set: {
      s.kind_ = Kind::index_set;
      s.mask_ = Eigen::VectorXd::Ones(static_cast<Index>(dim_)) - mask_;
      s.indices_.reserve(dim_ - indices_.size());
      for (std::size_t i = 0; i < dim_; ++i) {
        if (s.mask_[static_cast<Index>(i)] != 0.0) s.indices_.push_back(i);
      }
      s.tail_ = !tail_;
      break;
    }
    case Kind::frame:
      s.kind_ = Kind::frame_complement;
      s.frame_ = frame_;
      break;
    case Kind::frame_complement:
      s.kind_ = Kind::frame;
      s.frame_ = frame_;
      break;
  }
  return s;
}

Eigen::MatrixXd Subspace::basis_matrix() const {
  if (!is_finite()) {
    throw Error(ErrorCode::unsupported, "basis matrix of an infinite-dimensional subspace");
  }
  if (kind_ == Kind::frame) return frame_;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Index>(dim_), static_cast<Index>(indices_.size()));
  for (std::size_t j = 0; j < indices_.size(); ++j) {
    out(static_cast<Index>(indices_[j]), static_cast<Index>(j)) = 1.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operations

bool resolve_tail(const SpectralModel& model, const Subspace& s, Tail tail) {
  switch (tail) {
    case Tail::exclude: return false;
    case Tail::automatic: return model.is_analytic() && s.kind() == Subspace::Kind::index_set;
    case Tail::include:
      if (s.kind() == Subspace::Kind::frame_complement) {
        throw Error(ErrorCode::unsupported, "tail trace requested on the complement of a frame");
      }
      return true;
  }
  return false;
}

double inner(const HVector& u, const HVector& v) {
  require_same_dim(u.size(), v.size(), "inner product");
  return u.coeffs().dot(v.coeffs());
}

double norm_sq(const HVector& u) { return u.coeffs().squaredNorm(); }

HVector project(const HVector& y, const Subspace& s) {
  require_same_dim(y.size(), s.dim(), "projection");
  switch (s.kind()) {
    case Subspace::Kind::index_set: {
      HVector out(y.size());
      if (s.truncated_rank() * 4 < s.dim()) {
        for (std::size_t i : s.index_list()) out[i] = y[i];
      } else {
        for (std::size_t i = 0; i < y.size(); ++i) {
          if (s.contains_index(i)) out[i] = y[i];
        }
      }
      return out;
    }
    case Subspace::Kind::frame: {
      const auto& f = s.frame_columns();
      return HVector(Eigen::VectorXd(f * (f.transpose() * y.coeffs())));
    }
    case Subspace::Kind::frame_complement: {
      const auto& f = s.frame_columns();
      return HVector(Eigen::VectorXd(y.coeffs() - f * (f.transpose() * y.coeffs())));
    }
  }
  return y;
}

HVector apply_q(const SpectralModel& model, const HVector& u) {
  require_same_dim(u.size(), model.dim(), "apply Q");
  return HVector(Eigen::VectorXd(eigen_view(model).cwiseProduct(u.coeffs())));
}

double q_form(const SpectralModel& model, const HVector& u, const HVector& v) {
  require_same_dim(u.size(), model.dim(), "quadratic form");
  require_same_dim(v.size(), model.dim(), "quadratic form");
  return (eigen_view(model).cwiseProduct(u.coeffs())).dot(v.coeffs());
}

double trace_q_on(const SpectralModel& model, const Subspace& s, Tail tail) {
  require_same_dim(s.dim(), model.dim(), "trace");
  const bool use_tail = resolve_tail(model, s, tail);
  switch (s.kind()) {
    case Subspace::Kind::index_set: {
      CompensatedSum sum;
      for (std::size_t i : s.index_list()) sum.add(model.eigenvalue(i));
      if (use_tail && s.includes_tail()) sum.add(model.tail_trace());
      return sum.value();
    }
    case Subspace::Kind::frame:
      return compressed_q(model, s.frame_columns()).trace();
    case Subspace::Kind::frame_complement: {
      const double inside = compressed_q(model, s.frame_columns()).trace();
      return std::max(0.0, model.truncated_trace() - inside);
    }
  }
  return 0.0;
}

double hs_norm_sq_on(const SpectralModel& model, const Subspace& s) {
  require_same_dim(s.dim(), model.dim(), "Hilbert-Schmidt norm");
  switch (s.kind()) {
    case Subspace::Kind::index_set: {
      CompensatedSum sum;
      for (std::size_t i : s.index_list()) sum.add(model.eigenvalue(i) * model.eigenvalue(i));
      return sum.value();
    }
    case Subspace::Kind::frame:
      return compressed_q(model, s.frame_columns()).squaredNorm();
    case Subspace::Kind::frame_complement: {
      CompensatedSum sum;
      for (double l : model.eigenvalues()) sum.add(l * l);
      return std::max(0.0, sum.value() - compressed_q(model, s.frame_columns()).squaredNorm());
    }
  }
  return 0.0;
}

std::vector<double> spectrum_on(const SpectralModel& model, const Subspace& s) {
  require_same_dim(s.dim(), model.dim(), "spectrum");
  switch (s.kind()) {
    case Subspace::Kind::index_set: {
      std::vector<double> out;
      out.reserve(s.truncated_rank());
      for (std::size_t i : s.index_list()) out.push_back(model.eigenvalue(i));
      std::sort(out.begin(), out.end(), std::greater<>());
      return out;
    }
    case Subspace::Kind::frame: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(compressed_q(model, s.frame_columns()),
                                                            Eigen::EigenvaluesOnly);
      return sorted_descending(solver.eigenvalues());
    }
    case Subspace::Kind::frame_complement: {
      const auto block = complement_block(model, s.frame_columns());
      std::vector<double> out(block.values.data(), block.values.data() + block.values.size());
      for (Index i : block.outside_rows) out.push_back(model.eigenvalue(static_cast<std::size_t>(i)));
      std::sort(out.begin(), out.end(), std::greater<>());
      return out;
    }
  }
  return {};
}

double sup_eig_on(const SpectralModel& model, const Subspace& s) {
  require_same_dim(s.dim(), model.dim(), "operator norm");
  if (s.truncated_rank() == 0) {
    throw Error(ErrorCode::empty_subspace, "operator norm on an empty subspace");
  }
  if (s.kind() == Subspace::Kind::index_set) {
    double best = 0.0;
    for (std::size_t i : s.index_list()) best = std::max(best, model.eigenvalue(i));
    return best;
  }
  return spectrum_on(model, s).front();
}

std::size_t top_multiplicity(const SpectralModel& model, const Subspace& s, double rel_tol) {
  const double top = sup_eig_on(model, s);
  const double tol = rel_tol * top;
  std::size_t count = 0;
  if (s.kind() == Subspace::Kind::index_set) {
    for (std::size_t i : s.index_list()) {
      if (std::abs(model.eigenvalue(i) - top) <= tol) ++count;
    }
    return count;
  }
  for (double v : spectrum_on(model, s)) {
    if (std::abs(v - top) <= tol) ++count;
  }
  return count;
}

std::size_t rank_on(const SpectralModel& model, const Subspace& s) {
  require_same_dim(s.dim(), model.dim(), "rank");
  if (!s.is_finite()) {
    throw Error(ErrorCode::unsupported, "rank of Q on an infinite-dimensional subspace");
  }
  if (s.kind() == Subspace::Kind::index_set) {
    return static_cast<std::size_t>(std::count_if(s.index_list().begin(), s.index_list().end(),
                                                   [&](std::size_t i) { return model.eigenvalue(i) > 0.0; }));
  }
  const double threshold = 1e-12 * model.max_eigenvalue();
  const auto values = spectrum_on(model, s);
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double v) { return v > threshold; }));
}

EigenFrame eigen_frame_on(const SpectralModel& model, const Subspace& s) {
  require_same_dim(s.dim(), model.dim(), "eigen frame");
  if (!s.is_finite()) {
    throw Error(ErrorCode::unsupported, "eigen frame of an infinite-dimensional subspace");
  }
  EigenFrame out;
  if (s.kind() == Subspace::Kind::index_set) {
    out.vectors = s.basis_matrix();
    for (std::size_t i : s.index_list()) out.values.push_back(model.eigenvalue(i));
    return out;
  }
  const auto& f = s.frame_columns();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(compressed_q(model, f));
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = f * solver.eigenvectors();
  return out;
}

Subspace top_eigenspace(const SpectralModel& model, const Subspace& s, double rel_tol) {
  const double top = sup_eig_on(model, s);
  const double tol = rel_tol * top;
  const auto near_top = [&](double v) { return std::abs(v - top) <= tol; };

  if (s.kind() == Subspace::Kind::index_set) {
    std::vector<std::size_t> idx;
    for (std::size_t i : s.index_list()) {
      if (near_top(model.eigenvalue(i))) idx.push_back(i);
    }
    return Subspace::indices(model.dim(), std::move(idx));
  }

  const Index n = static_cast<Index>(model.dim());
  std::vector<Eigen::VectorXd> columns;
  std::vector<std::size_t> coordinate_only;
  if (s.kind() == Subspace::Kind::frame) {
    const auto ef = eigen_frame_on(model, s);
    for (std::size_t j = 0; j < ef.values.size(); ++j) {
      if (near_top(ef.values[j])) columns.emplace_back(ef.vectors.col(static_cast<Index>(j)));
    }
  } else {
    const auto block = complement_block(model, s.frame_columns());
    for (Index j = 0; j < block.values.size(); ++j) {
      if (!near_top(block.values[j])) continue;
      Eigen::VectorXd local = block.block_basis * block.vectors.col(j);
      Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
      for (std::size_t r = 0; r < block.block_rows.size(); ++r) {
        full[block.block_rows[r]] = local[static_cast<Index>(r)];
      }
      columns.push_back(std::move(full));
    }
    for (Index i : block.outside_rows) {
      if (near_top(model.eigenvalue(static_cast<std::size_t>(i)))) {
        coordinate_only.push_back(static_cast<std::size_t>(i));
      }
    }
  }
  if (columns.empty()) return Subspace::indices(model.dim(), std::move(coordinate_only));

  Eigen::MatrixXd m(n, static_cast<Index>(columns.size() + coordinate_only.size()));
  Index c = 0;
  for (auto& col : columns) m.col(c++) = col;
  for (std::size_t i : coordinate_only) m.col(c++) = Eigen::VectorXd::Unit(n, static_cast<Index>(i));
  return Subspace::frame(model, orthonormal_basis(m));
}

Subspace relative_complement(const SpectralModel& model, const Subspace& u, const Subspace& u0) {
  require_same_dim(u.dim(), model.dim(), "relative complement");
  require_same_dim(u0.dim(), model.dim(), "relative complement");
  if (!u.is_finite() || !u0.is_finite()) {
    throw Error(ErrorCode::unsupported, "relative complement needs finite-dimensional subspaces");
  }
  if (u.kind() == Subspace::Kind::index_set && u0.kind() == Subspace::Kind::index_set) {
    std::vector<std::size_t> diff;
    for (std::size_t i : u0.index_list()) {
      if (!u.contains_index(i)) {
        throw Error(ErrorCode::invalid_argument, "U0 is not contained in U");
      }
    }
    for (std::size_t i : u.index_list()) {
      if (!u0.contains_index(i)) diff.push_back(i);
    }
    return Subspace::indices(model.dim(), std::move(diff));
  }

  const Eigen::MatrixXd fu = u.basis_matrix();
  const Eigen::MatrixXd f0 = u0.basis_matrix();
  const Eigen::MatrixXd coords = fu.transpose() * f0;  // r x r0, orthonormal columns when U0 in U
  if (f0.cols() > 0 && (f0 - fu * coords).cwiseAbs().maxCoeff() > kGramTol) {
    throw Error(ErrorCode::invalid_argument, "U0 is not contained in U");
  }
  const Index r = fu.cols();
  const Index r0 = f0.cols();
  if (r0 >= r) return Subspace::none(model.dim());
  Eigen::MatrixXd rest;
  if (r0 == 0) {
    rest = fu;
  } else {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(coords);
    Eigen::MatrixXd full = qr.householderQ() * Eigen::MatrixXd::Identity(r, r);
    rest = fu * full.rightCols(r - r0);
  }
  return Subspace::span(model, rest);
}

double invariance_defect(const SpectralModel& model, const Eigen::MatrixXd& frame) {
  require_same_dim(static_cast<std::size_t>(frame.rows()), model.dim(), "invariance check");
  if (frame.cols() == 0) return 0.0;
  const Eigen::MatrixXd qf = eigen_view(model).asDiagonal() * frame;
  const Eigen::MatrixXd residual = qf - frame * (frame.transpose() * qf);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  return svd.singularValues()(0);
}

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& columns, double rel_threshold) {
  if (columns.cols() == 0) return Eigen::MatrixXd(columns.rows(), 0);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(columns);
  qr.setThreshold(rel_threshold);
  const Index rank = qr.rank();
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(columns.rows(), rank);
  return q;
}

}  // namespace hilbert_gauss
