#include "hilbert_gauss/distributions.hpp"

#include "hilbert_gauss/error.hpp"
#include "hilbert_gauss/random.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace hilbert_gauss {

namespace {

constexpr double kKsCoefficient5pct = 1.358;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::invalid_argument, std::string(name) + " must be positive and finite");
  }
}

void require_probability(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "probability must lie in (0, 1)");
  }
}

// Safeguarded Newton iteration on cdf(x) = a inside a bracket [lo, hi] with
// cdf(lo) <= a <= cdf(hi). Falls back to bisection whenever the Newton step
// leaves the bracket.
template <class Cdf, class Pdf>
double invert_cdf(Cdf&& cdf, Pdf&& pdf, double a, double lo, double hi) {
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 500; ++iter) {
    const double f = cdf(x) - a;
    if (f == 0.0) return x;
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double density = pdf(x);
    double next = density > 0.0 ? x - f / density : std::numeric_limits<double>::quiet_NaN();
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double scale = std::max(1.0, std::abs(next));
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * scale ||
        hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * scale) {
      return next;
    }
    x = next;
  }
  return x;
}

// Expand [lo, hi] geometrically until it brackets the a-quantile.
template <class Cdf>
void bracket(Cdf&& cdf, double a, double& lo, double& hi, bool positive_support) {
  for (int i = 0; i < 2000 && cdf(hi) < a; ++i) {
    lo = hi;
    hi *= 2.0;
  }
  if (positive_support) return;
  for (int i = 0; i < 2000 && cdf(lo) > a; ++i) {
    hi = lo;
    lo *= 2.0;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Normal

double norm_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double norm_quantile(double a) {
  require_probability(a);
  if (a == 0.5) return 0.0;
  // Solve in the lower tail and reflect, so tiny probabilities keep full precision.
  if (a > 0.5) return -norm_quantile(1.0 - a);
  return invert_cdf(norm_cdf, norm_pdf, a, -40.0, 0.0);
}

// ---------------------------------------------------------------------------
// Student t

double t_pdf(double dof, double x) {
  require_positive(dof, "degrees of freedom");
  const double log_norm = std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) -
                          0.5 * std::log(dof * std::numbers::pi);
  return std::exp(log_norm - 0.5 * (dof + 1.0) * std::log1p(x * x / dof));
}

double t_cdf(double dof, double x) {
  require_positive(dof, "degrees of freedom");
  if (x == 0.0) return 0.5;
  const double x2 = x * x;
  double upper;  // P(T > |x|)
  if (x2 < dof) {
    upper = 0.5 - 0.5 * boost::math::ibeta(0.5, 0.5 * dof, x2 / (dof + x2));
  } else {
    upper = 0.5 * boost::math::ibeta(0.5 * dof, 0.5, dof / (dof + x2));
  }
  return x > 0.0 ? 1.0 - upper : upper;
}

double t_quantile(double dof, double a) {
  require_positive(dof, "degrees of freedom");
  require_probability(a);
  if (a == 0.5) return 0.0;
  if (a < 0.5) return -t_quantile(dof, 1.0 - a);
  const auto cdf = [dof](double x) { return t_cdf(dof, x); };
  const auto pdf = [dof](double x) { return t_pdf(dof, x); };
  double lo = 0.0;
  double hi = 1.0;
  bracket(cdf, a, lo, hi, true);
  return invert_cdf(cdf, pdf, a, lo, hi);
}

// ---------------------------------------------------------------------------
// Fisher

double f_pdf(double m, double n, double x) {
  require_positive(m, "numerator dof");
  require_positive(n, "denominator dof");
  if (x <= 0.0) return 0.0;
  const double log_density = 0.5 * m * std::log(m / n) + (0.5 * m - 1.0) * std::log(x) -
                             0.5 * (m + n) * std::log1p(m * x / n) -
                             std::log(boost::math::beta(0.5 * m, 0.5 * n));
  return std::exp(log_density);
}

double f_cdf(double m, double n, double x) {
  require_positive(m, "numerator dof");
  require_positive(n, "denominator dof");
  if (x <= 0.0) return 0.0;
  const double z = m * x / (m * x + n);
  if (z < 0.5) return boost::math::ibeta(0.5 * m, 0.5 * n, z);
  return boost::math::ibetac(0.5 * n, 0.5 * m, n / (m * x + n));
}

double f_quantile(double m, double n, double a) {
  require_positive(m, "numerator dof");
  require_positive(n, "denominator dof");
  require_probability(a);
  const auto cdf = [m, n](double x) { return f_cdf(m, n, x); };
  const auto pdf = [m, n](double x) { return f_pdf(m, n, x); };
  double lo = 0.0;
  double hi = 1.0;
  bracket(cdf, a, lo, hi, true);
  return invert_cdf(cdf, pdf, a, lo, hi);
}

// ---------------------------------------------------------------------------
// Gamma / chi-square

double gamma_pdf(double shape, double rate, double x) {
  require_positive(shape, "shape");
  require_positive(rate, "rate");
  if (x <= 0.0) return 0.0;
  return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x - std::lgamma(shape));
}

double gamma_cdf(double shape, double rate, double x) {
  require_positive(shape, "shape");
  require_positive(rate, "rate");
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_p(shape, rate * x);
}

double chi2_cdf(double dof, double x) { return gamma_cdf(0.5 * dof, 0.5, x); }

double gamma_sample(RandomSource& rng, double shape, double rate) {
  require_positive(shape, "shape");
  require_positive(rate, "rate");
  if (shape < 1.0) {
    const double boosted = gamma_sample(rng, shape + 1.0, 1.0);
    return boosted * std::pow(rng.uniform(), 1.0 / shape) / rate;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = rng.normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

// ---------------------------------------------------------------------------
// Pearson VII and generalized Fisher

Pearson7Params::Pearson7Params(double alpha_, double m_) : alpha(alpha_), m(m_) {
  require_positive(alpha, "Pearson VII scale");
  if (!(m > 0.5)) throw Error(ErrorCode::invalid_argument, "Pearson VII shape must exceed 1/2");
}

Pearson7Params Pearson7Params::scaled(double c) const {
  require_positive(c, "scale factor");
  return {c * alpha, m};
}

double Pearson7Params::pdf(double x) const {
  const double log_norm = std::lgamma(m) - std::lgamma(m - 0.5) - 0.5 * std::log(std::numbers::pi) -
                          std::log(alpha);
  return std::exp(log_norm - m * std::log1p(x * x / (alpha * alpha)));
}

GenFisherParams::GenFisherParams(double m_, double n_, double a_, double b_) : m(m_), n(n_), a(a_), b(b_) {
  require_positive(m, "generalized Fisher m");
  require_positive(n, "generalized Fisher n");
  require_positive(a, "generalized Fisher a");
  require_positive(b, "generalized Fisher b");
}

GenFisherParams GenFisherParams::scaled(double c) const {
  require_positive(c, "scale factor");
  return {m, n, c * a, b};
}

double GenFisherParams::pdf(double x) const {
  if (x <= 0.0) return 0.0;
  const double r = x / a;
  const double log_density = 0.5 * m * std::log(m / n) - std::log(a * b) -
                             std::log(boost::math::beta(0.5 * m, 0.5 * n)) +
                             (0.5 * m / b - 1.0) * std::log(r) -
                             0.5 * (m + n) * std::log1p((m / n) * std::pow(r, 1.0 / b));
  return std::exp(log_density);
}

TRatio t_ratio_reduction(double alpha, double beta) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  return {std::sqrt(beta / alpha), 2.0 * alpha, Pearson7Params(std::sqrt(2.0 * beta), alpha + 0.5)};
}

FRatio gamma_ratio_reduction(double alpha, double beta, double gamma, double delta) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  require_positive(gamma, "gamma");
  require_positive(delta, "delta");
  const double scale = alpha * delta / (beta * gamma);
  return {scale, 2.0 * alpha, 2.0 * gamma, GenFisherParams(2.0 * alpha, 2.0 * gamma, scale, 1.0)};
}

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::invalid_argument, "KS needs nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical_5pct(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "KS needs a nonempty sample");
  return kKsCoefficient5pct / std::sqrt(static_cast<double>(n));
}

double ks_critical_5pct(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw Error(ErrorCode::invalid_argument, "KS needs nonempty samples");
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return kKsCoefficient5pct * std::sqrt((dn + dm) / (dn * dm));
}

}  // namespace hilbert_gauss
