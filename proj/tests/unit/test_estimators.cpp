#include "hilbert_gauss/error.hpp"
#include "hilbert_gauss/estimators.hpp"
#include "hilbert_gauss/harness.hpp"
#include "hilbert_gauss/processes.hpp"
#include "hilbert_gauss/random.hpp"
#include "hilbert_gauss/sampling.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hilbert_gauss;
using oracle::share;

namespace {

constexpr double kPi2 = oracle::kPi * oracle::kPi;

HVector random_vector(std::mt19937_64& gen, std::size_t dim) {
  std::normal_distribution<double> nd;
  HVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = nd(gen);
  return v;
}

}  // namespace

TEST(EstMean, ProjectsOntoU) {
  const auto u = Subspace::indices(8, {3});
  HVector y(8);
  y[3] = 1.7;
  y[0] = -2.0;
  const HVector z = est_mean(y, u);
  EXPECT_DOUBLE_EQ(z[3], 1.7);
  EXPECT_DOUBLE_EQ(norm_sq(z), 1.7 * 1.7);
  const HVector inside = est_mean(z, u);
  EXPECT_EQ(norm_sq(inside - z), 0.0);
}

TEST(EstFunctional, SelfAdjointAndOrthogonal) {
  std::mt19937_64 gen(5);
  const auto u = Subspace::indices(10, {1, 4, 7});
  for (int trial = 0; trial < 100; ++trial) {
    const HVector b = random_vector(gen, 10);
    const HVector y = random_vector(gen, 10);
    EXPECT_NEAR(est_functional(b, y, u), inner(project(b, u), y), 1e-12);
  }
  HVector perp(10);
  perp[0] = 3.0;
  EXPECT_EQ(est_functional(perp, random_vector(gen, 10), u), 0.0);
}

TEST(EstFunctional, AmplitudeTarget) {
  // b = 2 h_k with h_k = e_k / sqrt 2 and zeta = gamma h_k: <b, zeta> = gamma.
  const double gamma = 0.9;
  HVector b(16), zeta(16);
  b[3] = std::sqrt(2.0);
  zeta[3] = gamma / std::sqrt(2.0);
  EXPECT_NEAR(est_functional(b, zeta, Subspace::indices(16, {3})), gamma, 1e-15);
}

TEST(EstVariance, DenominatorAndZeroResidual) {
  const auto w = wiener_model(256);
  const auto u = Subspace::indices(256, {3});
  // 1/2 - 1/((3.5)^2 pi^2)
  EXPECT_NEAR(residual_trace(w, u), 0.5 - 1.0 / (3.5 * 3.5 * kPi2), 1e-15);
  EXPECT_NEAR(residual_trace(w, u), 0.4917288829679724, 1e-15);
  EXPECT_NEAR(residual_trace(w, u, Tail::exclude), 0.4917288829679724 - w.tail_trace(), 1e-15);
  HVector y(256);
  y[3] = 2.0;
  EXPECT_EQ(est_variance(y, w, u), 0.0);
  y[0] = 1.0;
  EXPECT_NEAR(est_variance(y, w, u), 1.0 / 0.4917288829679724, 1e-14);
  const auto full = custom_model({1.0, 1.0});
  try {
    est_variance(HVector(2), full, Subspace::all(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::hypothesis_violated);
  }
}

TEST(EstVariance, MonteCarloUnbiased) {
  const auto w = share(wiener_model(256));
  const auto u = Subspace::indices(256, {3});
  HVector zeta(256);
  zeta[3] = 0.5;
  for (double sigma : {0.5, 2.0}) {
    const GaussianLaw law(w, zeta, sigma, u);
    Rng rng(static_cast<std::uint64_t>(sigma * 100));
    const std::size_t m = 100000;
    Eigen::VectorXd s2(m), coef(m);
    HVector y;
    for (std::size_t i = 0; i < m; ++i) {
      sample_into(law, rng, y);
      s2[static_cast<Eigen::Index>(i)] = est_variance(y, *w, u, Tail::exclude);
      coef[static_cast<Eigen::Index>(i)] = est_mean(y, u)[3];
    }
    const Summary s = summarize(s2);
    const Summary c = summarize(coef);
    EXPECT_NEAR(s.mean, sigma * sigma, 3 * s.standard_error);
    EXPECT_NEAR(c.mean, 0.5, 3 * c.standard_error);
  }
}

TEST(RiskMean, ValuesAndScaling) {
  const auto w = wiener_model(64);
  const auto u = Subspace::indices(64, {3});
  EXPECT_NEAR(risk_mean(w, u, 1.0), 0.008271117032027573, 1e-17);
  EXPECT_NEAR(risk_mean(w, u, 2.0), 4 * risk_mean(w, u, 1.0), 1e-17);
  EXPECT_THROW(risk_mean(w, u, 0.0), Error);
}

TEST(RiskPartial, Decomposition) {
  const auto w = wiener_model(16);
  HVector zeta(16);
  zeta[1] = 0.7;
  const auto r = risk_partial(w, Subspace::indices(16, {0}), zeta, 1.5);
  EXPECT_NEAR(r.risk, 2.25 * w.eigenvalue(0) + 0.49, 1e-15);
  EXPECT_NEAR(r.bias, 0.7, 1e-15);
  const auto empty = risk_partial(w, Subspace::none(16), zeta, 1.0);
  EXPECT_NEAR(empty.risk, 0.49, 1e-15);
  EXPECT_EQ(empty.variance, 0.0);
  const auto cover = risk_partial(w, Subspace::indices(16, {1, 2}), zeta, 1.0);
  EXPECT_EQ(cover.bias, 0.0);
  EXPECT_DOUBLE_EQ(cover.risk, risk_mean(w, Subspace::indices(16, {1, 2}), 1.0));
}

TEST(LearningGap, Boundaries) {
  const auto w = wiener_model(32);
  const auto u = Subspace::indices(32, {0, 1, 2, 3, 4, 5});
  HVector zeta(32);
  EXPECT_EQ(learning_gap(w, u, zeta, 1.0, 6), 0.0);
  EXPECT_THROW(learning_gap(w, u, zeta, 1.0, 7), Error);
  double expected = 0.0;
  for (std::size_t k = 2; k < 6; ++k) expected -= w.eigenvalue(k);
  EXPECT_NEAR(learning_gap(w, u, zeta, 1.0, 2), expected, 1e-16);
  // Including the untruncated remainder of an index set with tail.
  const auto everything = Subspace::none(32).complement();
  EXPECT_NEAR(learning_gap(w, everything, zeta, 1.0, 32, Tail::include), -w.tail_trace(), 1e-17);
}

TEST(LearningGap, MonotoneWhenTermsShareSign) {
  const auto w = wiener_model(64);
  std::vector<std::size_t> idx(40);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto u = Subspace::indices(64, idx);
  HVector zeta(64);
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n <= idx.size(); ++n) {
    const double gap = learning_gap(w, u, zeta, 0.7, n);
    EXPECT_LE(gap, 0.0);
    EXPECT_LT(std::abs(gap), previous + 1e-18);
    previous = std::abs(gap);
  }
  EXPECT_EQ(previous, 0.0);
}

TEST(LearningGap, FrameOrderIsByEigenvalue) {
  const auto m = custom_model({2.0, 2.0, 1.0});
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd f(3, 2);
  f << r, 0, r, 0, 0, 1;
  const auto u = Subspace::frame(m, f);
  HVector zeta{0.5, 0.5, 0.0};
  // Eigen-coordinates: (2, <zeta, (e1 + e2)/sqrt2> = r) and (1, 0).
  EXPECT_NEAR(learning_gap(m, u, zeta, 1.0, 1), -1.0, 1e-14);
  EXPECT_NEAR(learning_gap(m, u, zeta, 1.0, 0), 0.5 - 2.0 - 1.0, 1e-14);
}

TEST(VarianceEstRisk, Values) {
  const auto single = custom_model({3.0, 0.25});
  EXPECT_DOUBLE_EQ(variance_est_risk(single, Subspace::indices(2, {0}), 1.3), 2 * std::pow(1.3, 4));
  const auto w = wiener_model(256);
  const double r = variance_est_risk(w, Subspace::indices(256, {3}), 1.0);
  EXPECT_LT(r, 2.0);
  EXPECT_GT(r, 0.0);
  double l1 = 0, l2 = 0;
  for (std::size_t k = 0; k < 256; ++k) {
    if (k == 3) continue;
    l1 += w.eigenvalue(k);
    l2 += w.eigenvalue(k) * w.eigenvalue(k);
  }
  EXPECT_NEAR(r, 2 * l2 / (l1 * l1), 1e-14);
  EXPECT_THROW(variance_est_risk(custom_model({1.0}), Subspace::all(1), 1.0), Error);
}

TEST(GaussMarkov, ExamplesAndPrecondition) {
  const auto w = wiener_model(32);
  const auto u = Subspace::indices(32, {3});
  HVector b(32);
  b[3] = std::sqrt(2.0);
  const auto same = gm_variances(b, project(b, u), w, u, 1.0);
  EXPECT_NEAR(same.best, 2 * w.eigenvalue(3), 1e-17);
  EXPECT_DOUBLE_EQ(same.best, same.competitor);
  HVector c = b;
  c[7] = 1.0;
  const auto worse = gm_variances(b, c, w, u, 2.0);
  EXPECT_NEAR(worse.competitor - worse.best, 4 * w.eigenvalue(7), 1e-16);
  HVector biased = b;
  biased[3] += 0.1;
  try {
    gm_variances(b, biased, w, u, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unbiasedness_violated);
  }
}

// Property: for random (b, c) with Pi_U c = Pi_U b the best variance never
// exceeds the competitor's, with equality exactly when Pi_{U-perp} c lies in
// ker Q.
TEST(GaussMarkovProperty, ThousandRandomPairs) {
  std::vector<double> eigs{0.9, 0.5, 0.5, 0.2, 0.1, 0.05, 0.0, 0.0};
  const auto m = custom_model(eigs);
  std::mt19937_64 gen(1234);
  std::uniform_int_distribution<int> coin(0, 1);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 8; ++i) {
      if (coin(gen)) idx.push_back(i);
    }
    const auto u = Subspace::indices(8, idx);
    const HVector b = random_vector(gen, 8);
    HVector c = project(b, u) + project(random_vector(gen, 8), u.complement());
    if (trial % 10 == 0) c = project(b, u) + project(HVector::unit(8, 6), u.complement());
    const auto v = gm_variances(b, c, m, u, 0.7);
    if (v.best > v.competitor + 1e-14) ++violations;
    const bool in_kernel = q_form(m, project(c, u.complement()), project(c, u.complement())) == 0.0;
    if (in_kernel != (std::abs(v.competitor - v.best) <= 1e-14)) ++violations;
  }
  EXPECT_EQ(violations, 0);
}

// Property: diagonal estimators T with T = Id on U are unbiased for zeta in U
// and never beat the projection's risk.
TEST(RiskMinimalityProperty, DiagonalPerturbations) {
  const auto w = wiener_model(24);
  std::mt19937_64 gen(4321);
  std::normal_distribution<double> nd;
  const auto u = Subspace::indices(24, {0, 2, 3, 9});
  HVector zeta(24);
  for (std::size_t i : u.index_list()) zeta[i] = nd(gen);
  const double best = risk_mean(w, u, 1.1);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::VectorXd t(24);
    for (Eigen::Index k = 0; k < 24; ++k) {
      t[k] = u.contains_index(static_cast<std::size_t>(k)) ? 1.0 : nd(gen) * (trial % 2 ? 1e-3 : 1.0);
    }
    const RiskReport r = diagonal_estimator_risk(w, t, zeta, 1.1);
    if (r.bias != 0.0) ++violations;
    if (r.risk < best - 1e-15) ++violations;
    if (std::abs(r.risk - (r.variance + r.bias * r.bias)) > 1e-12) ++violations;
  }
  EXPECT_EQ(violations, 0);
  Eigen::VectorXd proj = Eigen::VectorXd::Zero(24);
  for (std::size_t i : u.index_list()) proj[static_cast<Eigen::Index>(i)] = 1.0;
  EXPECT_NEAR(diagonal_estimator_risk(w, proj, zeta, 1.1).risk, best, 1e-15);
}

TEST(RiskReport, DecompositionIdentity) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> ud(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const auto r = RiskReport::from(ud(gen), ud(gen));
    EXPECT_NEAR(r.risk, r.variance + r.bias * r.bias, 1e-12);
  }
}

TEST(RiskMonteCarlo, MeanAndVarianceEstimator) {
  const auto w = share(wiener_model(256));
  const auto u = Subspace::indices(256, {3});
  HVector zeta(256);
  zeta[3] = -0.3;
  const double sigma = 0.8;
  const GaussianLaw law(w, zeta, sigma, u);
  Rng rng(55);
  const std::size_t m = 100000;
  Eigen::VectorXd loss(m), vloss(m);
  HVector y;
  for (std::size_t i = 0; i < m; ++i) {
    sample_into(law, rng, y);
    loss[static_cast<Eigen::Index>(i)] = norm_sq(est_mean(y, u) - zeta);
    const double d = est_variance(y, *w, u, Tail::exclude) - sigma * sigma;
    vloss[static_cast<Eigen::Index>(i)] = d * d;
  }
  const Summary a = summarize(loss);
  const Summary b = summarize(vloss);
  EXPECT_NEAR(a.mean, risk_mean(*w, u, sigma), 3 * a.standard_error);
  EXPECT_NEAR(b.mean, variance_est_risk(*w, u, sigma), 3 * b.standard_error);
  EXPECT_LE(b.mean, 2 * std::pow(sigma, 4) + 3 * b.standard_error);
}
