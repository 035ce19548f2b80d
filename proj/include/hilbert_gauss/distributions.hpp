#pragma once

// Normal, Student-t, Fisher, Gamma and chi-square families: CDFs, quantiles,
// densities and a Gamma sampler, plus the two ratio reductions used by the
// interval and test constructions:
//
//   X ~ N(0,1), Y ~ Gamma(a, b) independent:  X / sqrt(Y) = sqrt(b/a) Z,  Z ~ t_{2a}
//   X ~ Gamma(a, b), Y ~ Gamma(c, d):          X / Y = (a d)/(b c) Z,      Z ~ F_{2a,2c}
//
// Gamma(shape, rate) throughout. Degrees of freedom may be non-integer.

#include <cstddef>
#include <vector>

namespace hilbert_gauss {

class RandomSource;

double norm_pdf(double x);
double norm_cdf(double x);
double norm_quantile(double a);

double t_pdf(double dof, double x);
double t_cdf(double dof, double x);
double t_quantile(double dof, double a);

double f_pdf(double m, double n, double x);
double f_cdf(double m, double n, double x);
double f_quantile(double m, double n, double a);

double gamma_pdf(double shape, double rate, double x);
double gamma_cdf(double shape, double rate, double x);

double chi2_cdf(double dof, double x);

/// Marsaglia-Tsang squeeze for shape >= 1; shape < 1 boosted from shape + 1.
double gamma_sample(RandomSource& rng, double shape, double rate);

/// Pearson type VII law P(alpha, m), density proportional to (1 + x^2/alpha^2)^{-m}.
struct Pearson7Params {
  double alpha;
  double m;

  Pearson7Params(double alpha, double m);
  /// Law of c Z for Z ~ P(alpha, m).
  Pearson7Params scaled(double c) const;
  double pdf(double x) const;
};

/// Generalized Fisher law F_{m,n}(a, b); F_{m,n}(1, 1) is the Fisher law.
struct GenFisherParams {
  double m;
  double n;
  double a;
  double b;

  GenFisherParams(double m, double n, double a, double b);
  /// Law of c Z for Z ~ F_{m,n}(a, b).
  GenFisherParams scaled(double c) const;
  double pdf(double x) const;
};

struct TRatio {
  double scale;  // sqrt(beta / alpha)
  double dof;    // 2 alpha
  Pearson7Params pearson;
};

struct FRatio {
  double scale;  // alpha delta / (beta gamma)
  double dof_num;
  double dof_den;
  GenFisherParams fisher;
};

/// Law of X / sqrt(Y), X ~ N(0,1), Y ~ Gamma(alpha, beta).
TRatio t_ratio_reduction(double alpha, double beta);
/// Law of X / Y, X ~ Gamma(alpha, beta), Y ~ Gamma(gamma, delta).
FRatio gamma_ratio_reduction(double alpha, double beta, double gamma, double delta);

/// sup |F_n - F| of a sample against a continuous CDF.
template <class Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& cdf);
/// Two-sample Kolmogorov-Smirnov distance.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);
/// Asymptotic 5% critical values: 1.358 / sqrt(n_eff).
double ks_critical_5pct(std::size_t n);
double ks_critical_5pct(std::size_t n, std::size_t m);

}  // namespace hilbert_gauss

#include <algorithm>

namespace hilbert_gauss {

template <class Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace hilbert_gauss
