#include "hilbert_gauss/error.hpp"
#include "hilbert_gauss/processes.hpp"
#include "hilbert_gauss/spectral.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hilbert_gauss;

namespace {

// lambda = (4, 2, 2, 1, 0.5, 0): a repeated pair and a null direction.
SpectralModel blocky() { return custom_model({4.0, 2.0, 2.0, 1.0, 0.5, 0.0}); }

Eigen::MatrixXd cols(std::initializer_list<std::initializer_list<double>> columns, Eigen::Index rows) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(columns.size()));
  Eigen::Index c = 0;
  for (const auto& col : columns) {
    Eigen::Index r = 0;
    for (double v : col) m(r++, c) = v;
    ++c;
  }
  return m;
}

}  // namespace

TEST(SpectralModel, RejectsBadEigenvalues) {
  EXPECT_THROW(custom_model({}), Error);
  EXPECT_THROW(custom_model({1.0, -0.1}), Error);
  EXPECT_THROW(custom_model({1.0, std::nan("")}), Error);
  EXPECT_THROW(custom_model({1.0}, -1.0), Error);
  EXPECT_NO_THROW(custom_model({0.0, 0.0}));
}

TEST(SpectralModel, TracesAndAccessors) {
  const auto m = blocky();
  EXPECT_EQ(m.dim(), 6u);
  EXPECT_DOUBLE_EQ(m.truncated_trace(), 9.5);
  EXPECT_DOUBLE_EQ(m.max_eigenvalue(), 4.0);
  EXPECT_DOUBLE_EQ(m.sqrt_eigenvalue(1), std::sqrt(2.0));
  EXPECT_FALSE(m.is_analytic());
  EXPECT_EQ(basis_from_string("custom"), Basis::abstract);
  EXPECT_EQ(basis_from_string("wiener"), Basis::wiener);
  EXPECT_THROW(basis_from_string("ornstein"), Error);
}

TEST(SpectralModel, CompensatedTraceOfManySmallTerms) {
  std::vector<double> eigs(1'000'000, 1e-7);
  eigs[0] = 1.0;
  const auto m = custom_model(std::move(eigs));
  EXPECT_NEAR(m.truncated_trace(), 1.0 + 999'999 * 1e-7, 1e-15);
}

TEST(HVector, ArithmeticAndValidation) {
  HVector a{1.0, 2.0, 3.0};
  const HVector b{0.5, 0.5, 0.5};
  EXPECT_DOUBLE_EQ(inner(a, b), 3.0);
  EXPECT_DOUBLE_EQ(norm_sq(a - b), 0.25 + 2.25 + 6.25);
  a *= 2.0;
  EXPECT_DOUBLE_EQ(a[2], 6.0);
  EXPECT_THROW(HVector({1.0, INFINITY}), Error);
  EXPECT_THROW(inner(a, HVector(2)), Error);
  EXPECT_DOUBLE_EQ(HVector::unit(4, 2)[2], 1.0);
  EXPECT_THROW(HVector::unit(4, 4), Error);
}

TEST(Subspace, IndexSetsAreSortedAndValidated) {
  const auto s = Subspace::indices(6, {3, 0, 5});
  EXPECT_EQ(s.index_list(), (std::vector<std::size_t>{0, 3, 5}));
  EXPECT_TRUE(s.is_finite());
  EXPECT_EQ(s.truncated_rank(), 3u);
  EXPECT_THROW(Subspace::indices(6, {1, 1}), Error);
  EXPECT_THROW(Subspace::indices(6, {6}), Error);
}

TEST(Subspace, ComplementCarriesTheTail) {
  const auto s = Subspace::indices(6, {1, 2});
  const auto c = s.complement();
  EXPECT_TRUE(c.includes_tail());
  EXPECT_FALSE(c.is_finite());
  EXPECT_EQ(c.index_list(), (std::vector<std::size_t>{0, 3, 4, 5}));
  const auto cc = c.complement();
  EXPECT_FALSE(cc.includes_tail());
  EXPECT_EQ(cc.index_list(), s.index_list());
}

TEST(Subspace, ProjectionIsIdempotentAndSelfAdjoint) {
  const auto m = blocky();
  const double r = 1.0 / std::sqrt(2.0);
  const auto f = Subspace::frame(m, cols({{0, r, r}}, 6));
  std::mt19937_64 gen(7);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 100; ++trial) {
    HVector x(6), y(6);
    for (std::size_t i = 0; i < 6; ++i) {
      x[i] = nd(gen);
      y[i] = nd(gen);
    }
    for (const Subspace& s : {Subspace::indices(6, {0, 4}), f, f.complement(), Subspace::indices(6, {2}).complement()}) {
      const HVector px = project(x, s);
      EXPECT_NEAR(norm_sq(project(px, s) - px), 0.0, 1e-24);
      EXPECT_NEAR(inner(px, y), inner(x, project(y, s)), 1e-12);
      EXPECT_NEAR(norm_sq(px) + norm_sq(project(x, s.complement())), norm_sq(x), 1e-12);
    }
  }
}

TEST(Subspace, FrameInsideMultiplicityBlockIsInvariant) {
  const auto m = blocky();
  const double r = 1.0 / std::sqrt(2.0);
  const auto f = Subspace::frame(m, cols({{0, r, r}}, 6));
  EXPECT_EQ(f.kind(), Subspace::Kind::frame);
  EXPECT_DOUBLE_EQ(trace_q_on(m, f), 2.0);
  EXPECT_DOUBLE_EQ(sup_eig_on(m, f), 2.0);
  EXPECT_EQ(rank_on(m, f), 1u);
}

TEST(Subspace, MixingDistinctEigenvaluesIsNotInvariant) {
  const auto m = blocky();
  const double r = 1.0 / std::sqrt(2.0);
  // ||(I - P) Q P|| for P onto (e1 + e2)/sqrt2 equals |4 - 2| / 2 = 1.
  EXPECT_NEAR(invariance_defect(m, cols({{r, r}}, 6)), 1.0, 1e-14);
  try {
    Subspace::frame(m, cols({{r, r}}, 6));
    FAIL() << "expected not_invariant";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_invariant);
  }
  EXPECT_THROW(Subspace::frame(m, cols({{1, 1}}, 6)), Error);  // not normalized
}

TEST(Subspace, SpanDetectsCoordinateColumns) {
  const auto m = blocky();
  const auto s = Subspace::span(m, cols({{1, 0, 0}, {0, 0, 3}}, 6));
  ASSERT_EQ(s.kind(), Subspace::Kind::index_set);
  EXPECT_EQ(s.index_list(), (std::vector<std::size_t>{0, 2}));
  // Two columns spanning the whole multiplicity block are also coordinate.
  const auto block = Subspace::span(m, cols({{0, 1, 1}, {0, 1, -1}}, 6));
  ASSERT_EQ(block.kind(), Subspace::Kind::index_set);
  EXPECT_EQ(block.index_list(), (std::vector<std::size_t>{1, 2}));
  try {
    Subspace::span(m, cols({{0, 1, 1}, {0, 2, 2}}, 6));
    FAIL() << "expected rank_deficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::rank_deficient);
  }
}

TEST(SpectralOps, IndexSetQuantities) {
  const auto m = blocky();
  const auto s = Subspace::indices(6, {1, 2, 3});
  EXPECT_DOUBLE_EQ(trace_q_on(m, s), 5.0);
  EXPECT_DOUBLE_EQ(hs_norm_sq_on(m, s), 9.0);
  EXPECT_DOUBLE_EQ(sup_eig_on(m, s), 2.0);
  EXPECT_EQ(top_multiplicity(m, s), 2u);
  EXPECT_EQ(rank_on(m, Subspace::indices(6, {4, 5})), 1u);
  EXPECT_EQ(spectrum_on(m, s), (std::vector<double>{2.0, 2.0, 1.0}));
  EXPECT_THROW(sup_eig_on(m, Subspace::none(6)), Error);
  EXPECT_THROW(rank_on(m, s.complement()), Error);
}

TEST(SpectralOps, TailPolicy) {
  const auto w = wiener_model(8);
  const auto u = Subspace::indices(8, {3});
  const auto c = u.complement();
  const double truncated = w.truncated_trace() - w.eigenvalue(3);
  EXPECT_DOUBLE_EQ(trace_q_on(w, c, Tail::exclude), truncated);
  EXPECT_NEAR(trace_q_on(w, c, Tail::automatic), 0.5 - w.eigenvalue(3), 1e-15);
  EXPECT_NEAR(trace_q_on(w, c, Tail::include), 0.5 - w.eigenvalue(3), 1e-15);
  // Finite subspaces never pick up the tail.
  EXPECT_DOUBLE_EQ(trace_q_on(w, u, Tail::include), w.eigenvalue(3));
  const auto custom = custom_model({1.0, 0.5}, 0.25);
  EXPECT_DOUBLE_EQ(trace_q_on(custom, Subspace::indices(2, {0}).complement(), Tail::automatic), 0.5);
  EXPECT_DOUBLE_EQ(trace_q_on(custom, Subspace::indices(2, {0}).complement(), Tail::include), 0.75);
}

TEST(SpectralOps, FrameComplementSpectrum) {
  const auto m = blocky();
  const double r = 1.0 / std::sqrt(2.0);
  const auto f = Subspace::frame(m, cols({{0, r, r}}, 6));
  const auto c = f.complement();
  EXPECT_EQ(c.truncated_rank(), 5u);
  EXPECT_EQ(spectrum_on(m, c), (std::vector<double>{4.0, 2.0, 1.0, 0.5, 0.0}));
  EXPECT_NEAR(trace_q_on(m, c), 7.5, 1e-14);
  EXPECT_NEAR(hs_norm_sq_on(m, c), 16.0 + 4.0 + 1.0 + 0.25, 1e-13);
  EXPECT_THROW(trace_q_on(m, c, Tail::include), Error);
}

TEST(SpectralOps, TopEigenspace) {
  const auto m = blocky();
  const auto top = top_eigenspace(m, Subspace::indices(6, {0}).complement());
  EXPECT_EQ(top.index_list(), (std::vector<std::size_t>{1, 2}));
  // Complement of a frame inside the 2-block: the other diagonal of the block.
  const double r = 1.0 / std::sqrt(2.0);
  const auto f = Subspace::frame(m, cols({{0, r, r}, {1}}, 6));
  const auto t = top_eigenspace(m, f.complement());
  ASSERT_EQ(t.kind(), Subspace::Kind::frame);
  ASSERT_EQ(t.truncated_rank(), 1u);
  const Eigen::VectorXd v = t.frame_columns().col(0);
  EXPECT_NEAR(std::abs(v[1]), r, 1e-12);
  EXPECT_NEAR(v[1], -v[2], 1e-12);
}

TEST(SpectralOps, RelativeComplement) {
  const auto w = wiener_model(10);
  const auto d = relative_complement(w, Subspace::indices(10, {3, 4, 5}), Subspace::indices(10, {3}));
  EXPECT_EQ(d.index_list(), (std::vector<std::size_t>{4, 5}));
  EXPECT_THROW(relative_complement(w, Subspace::indices(10, {3}), Subspace::indices(10, {4})), Error);

  const auto m = blocky();
  const double r = 1.0 / std::sqrt(2.0);
  const auto u = Subspace::indices(6, {0, 1, 2});
  const auto u0 = Subspace::frame(m, cols({{0, r, r}}, 6));
  const auto diff = relative_complement(m, u, u0);
  EXPECT_EQ(diff.truncated_rank(), 2u);
  const auto spec = spectrum_on(m, diff);
  ASSERT_EQ(spec.size(), 2u);
  EXPECT_NEAR(spec[0], 4.0, 1e-14);
  EXPECT_NEAR(spec[1], 2.0, 1e-14);
  HVector x{1, 2, 3, 4, 5, 6};
  EXPECT_NEAR(norm_sq(project(x, u)), norm_sq(project(x, u0)) + norm_sq(project(x, diff)), 1e-12);
}

// Property: any orthonormal frame obtained by rotating inside eigenspaces is
// invariant, and its spectral data matches the coordinate subspace it spans.
TEST(SpectralProperties, RotatedBlocksMatchCoordinateSpans) {
  const auto m = custom_model({3, 3, 3, 1, 1, 0.5, 0.25, 0.25});
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(8, 8);
    rot.block(0, 0, 3, 3) = oracle::random_rotation(gen, 3);
    rot.block(3, 3, 2, 2) = oracle::random_rotation(gen, 2);
    rot.block(6, 6, 2, 2) = oracle::random_rotation(gen, 2);
    Eigen::MatrixXd pick(8, 4);
    pick << rot.col(0), rot.col(1), rot.col(3), rot.col(6);
    const auto f = Subspace::frame(m, pick);
    EXPECT_NEAR(trace_q_on(m, f), 3 + 3 + 1 + 0.25, 1e-12);
    EXPECT_NEAR(hs_norm_sq_on(m, f), 9 + 9 + 1 + 0.0625, 1e-12);
    EXPECT_NEAR(sup_eig_on(m, f), 3.0, 1e-12);
    EXPECT_EQ(top_multiplicity(m, f, 1e-10), 2u);
    const auto spec = spectrum_on(m, f.complement());
    ASSERT_EQ(spec.size(), 4u);
    EXPECT_NEAR(spec[0], 3.0, 1e-12);
    EXPECT_NEAR(spec[1], 1.0, 1e-12);
    EXPECT_NEAR(spec[2], 0.5, 1e-12);
    EXPECT_NEAR(spec[3], 0.25, 1e-12);
  }
}

TEST(OrthonormalBasis, DropsDependentColumns) {
  Eigen::MatrixXd a(4, 3);
  a << 1, 2, 0, 0, 0, 1, 1, 2, 0, 0, 0, 1;
  const Eigen::MatrixXd q = orthonormal_basis(a);
  EXPECT_EQ(q.cols(), 2);
  EXPECT_NEAR((q.transpose() * q - Eigen::MatrixXd::Identity(2, 2)).norm(), 0.0, 1e-14);
}
