#include "hilbert_gauss/harness.hpp"

#include "hilbert_gauss/distributions.hpp"
#include "hilbert_gauss/error.hpp"
#include "hilbert_gauss/estimators.hpp"
#include "hilbert_gauss/inference.hpp"
#include "hilbert_gauss/random.hpp"
#include "hilbert_gauss/regression.hpp"
#include "hilbert_gauss/sampling.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <thread>

namespace hilbert_gauss {

namespace {

constexpr double kSigmas = 3.0;

struct NamedKind {
  ExperimentKind kind;
  const char* name;
};

constexpr NamedKind kKinds[] = {
    {ExperimentKind::coverage_known, "coverage_known"},
    {ExperimentKind::coverage_unknown, "coverage_unknown"},
    {ExperimentKind::level, "level"},
    {ExperimentKind::unbiasedness, "unbiasedness"},
    {ExperimentKind::moments, "moments"},
    {ExperimentKind::independence, "independence"},
    {ExperimentKind::noise_law, "noise_law"},
    {ExperimentKind::risk, "risk"},
    {ExperimentKind::learning_curve, "learning_curve"},
};

Error config_error(const std::string& what) { return Error(ErrorCode::config, what); }

std::string mode_label(const Subspace& u, std::size_t j) {
  if (u.kind() == Subspace::Kind::index_set) return std::to_string(u.index_list()[j] + 1);
  return "f" + std::to_string(j + 1);
}

// Everything a replicate needs, resolved once from the config and shared
// read-only between workers.
class Plan {
 public:
  explicit Plan(const ExperimentConfig& cfg) : cfg_(cfg) {
    if (!cfg.model) throw config_error("experiment needs a model");
    if (cfg.replicates < 1) throw config_error("replicates must be at least 1");
    if (!(cfg.sigma > 0.0) || !std::isfinite(cfg.sigma)) throw config_error("sigma must be positive");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw config_error("alpha must lie in (0, 1)");
    const auto& model = *cfg.model;
    const std::size_t dim = model.dim();

    if (cfg.design) {
      design_.emplace(model, cfg.design->columns);
      if (cfg.design->beta.size() != design_->columns().cols()) {
        throw config_error("design beta length differs from the number of columns");
      }
      u_.emplace(design_->range());
      zeta_ = design_->apply(cfg.design->beta);
      if (cfg.design->c) {
        b_ = pullback_functional(*design_, *cfg.design->c);
        target_functional_ = cfg.design->c->dot(cfg.design->beta);
      }
    } else {
      if (cfg.u) u_.emplace(*cfg.u);
      zeta_ = cfg.zeta.value_or(HVector(dim));
      if (cfg.functional) {
        b_ = *cfg.functional;
        target_functional_ = inner(*b_, zeta_);
      }
    }
    if (zeta_.size() != dim) throw config_error("zeta length differs from model truncation");
    if (cfg.u0) u0_.emplace(*cfg.u0);
    law_ = std::make_unique<GaussianLaw>(cfg.model, zeta_, cfg.sigma, u_);

    switch (cfg.kind) {
      case ExperimentKind::coverage_known:
      case ExperimentKind::coverage_unknown:
        need_u();
        if (!b_) throw config_error("coverage experiments need a functional (or design c)");
        columns_ = {"covered", "center", "half_width", "zero_residual"};
        break;
      case ExperimentKind::level:
        need_u();
        if (design_) {
          if (!cfg.design->g0) throw config_error("level experiment with a design needs g0");
        } else if (!u0_) {
          throw config_error("level experiment needs a null subspace");
        }
        columns_ = {"reject", "statistic", "zero_residual"};
        break;
      case ExperimentKind::unbiasedness: {
        need_u();
        if (!u_->is_finite()) throw config_error("unbiasedness needs a finite-dimensional U");
        basis_ = u_->basis_matrix();
        for (Eigen::Index j = 0; j < basis_.cols(); ++j) {
          columns_.push_back("coef_" + mode_label(*u_, static_cast<std::size_t>(j)));
        }
        columns_.push_back("s2");
        break;
      }
      case ExperimentKind::moments:
        columns_ = {"norm_sq"};
        if (u_) columns_.push_back("proj_norm_sq");
        break;
      case ExperimentKind::independence:
        need_u();
        if (!u_->is_finite() || u_->truncated_rank() == 0) {
          throw config_error("independence needs a nonzero finite-dimensional U");
        }
        basis_ = u_->basis_matrix();
        if (!b_) {
          b_ = HVector(Eigen::VectorXd(basis_.col(0)));
          target_functional_ = inner(*b_, zeta_);
        }
        columns_ = {"functional", "s2", "coef_first", "residual_norm_sq"};
        break;
      case ExperimentKind::noise_law: {
        need_u();
        const Subspace comp = u_->complement();
        top_.emplace(top_eigenspace(model, comp));
        noise_ = noise_decomposition(model, *u_, u0_);
        columns_ = {"s_norm_sq"};
        if (u0_) {
          diff_.emplace(relative_complement(model, *u_, *u0_));
          dominating_.emplace(model, *diff_);
          columns_.push_back("t_norm_sq");
          columns_.push_back("dominance_gap");
        }
        break;
      }
      case ExperimentKind::risk:
        need_u();
        columns_ = {"mean_loss", "variance_loss"};
        break;
      case ExperimentKind::learning_curve: {
        need_u();
        if (u_->kind() != Subspace::Kind::index_set || u_->includes_tail()) {
          throw config_error("learning_curve needs a finite index-set U");
        }
        const auto& idx = u_->index_list();
        cutoffs_ = cfg.cutoffs;
        if (cutoffs_.empty()) {
          for (std::size_t n = 0; n <= idx.size(); ++n) cutoffs_.push_back(n);
        }
        columns_ = {"loss_full"};
        for (std::size_t n : cutoffs_) {
          if (n > idx.size()) throw config_error("cutoff exceeds the number of modes in U");
          prefixes_.push_back(Subspace::indices(dim, std::vector<std::size_t>(idx.begin(), idx.begin() + n)));
          columns_.push_back("loss_" + std::to_string(n));
        }
        break;
      }
    }
  }

  const std::vector<std::string>& columns() const noexcept { return columns_; }

  void replicate(Rng& rng, HVector& y, double* row) const {
    const auto& model = *cfg_.model;
    sample_into(*law_, rng, y);
    switch (cfg_.kind) {
      case ExperimentKind::coverage_known:
      case ExperimentKind::coverage_unknown: {
        try {
          Interval ci;
          const bool known = cfg_.kind == ExperimentKind::coverage_known;
          if (design_) {
            ci = known ? ci_beta_known(*cfg_.design->c, *design_, y, model, cfg_.sigma, cfg_.alpha)
                       : ci_beta_unknown(*cfg_.design->c, *design_, y, model, cfg_.alpha, cfg_.tail);
          } else {
            ci = known ? ci_known(*b_, y, model, *u_, cfg_.sigma, cfg_.alpha)
                       : ci_unknown(*b_, y, model, *u_, cfg_.alpha, cfg_.tail);
          }
          row[0] = ci.contains(target_functional_) ? 1.0 : 0.0;
          row[1] = ci.center;
          row[2] = ci.half_width;
          row[3] = 0.0;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::zero_residual) throw;
          row[0] = 0.0;  // counted against coverage
          row[1] = row[2] = 0.0;
          row[3] = 1.0;
        }
        break;
      }
      case ExperimentKind::level: {
        try {
          const TestResult r = design_ ? test_beta(y, *design_, *cfg_.design->g0, model, cfg_.alpha)
                                       : test_subspace(y, model, *u_, *u0_, cfg_.alpha);
          row[0] = r.reject ? 1.0 : 0.0;
          row[1] = r.statistic;
          row[2] = 0.0;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::zero_residual) throw;
          row[0] = 1.0;  // counted as a rejection
          row[1] = 0.0;
          row[2] = 1.0;
        }
        break;
      }
      case ExperimentKind::unbiasedness: {
        const HVector est = est_mean(y, *u_);
        const Eigen::VectorXd coords = basis_.transpose() * est.coeffs();
        for (Eigen::Index j = 0; j < coords.size(); ++j) row[j] = coords[j];
        row[coords.size()] = est_variance(y, model, *u_, cfg_.tail);
        break;
      }
      case ExperimentKind::moments:
        row[0] = norm_sq(y);
        if (u_) row[1] = norm_sq(project(y, *u_));
        break;
      case ExperimentKind::independence: {
        const HVector pu = est_mean(y, *u_);
        row[0] = inner(*b_, pu);
        row[1] = est_variance(y, model, *u_, cfg_.tail);
        row[2] = basis_.col(0).dot(pu.coeffs());
        row[3] = norm_sq(y - pu);
        break;
      }
      case ExperimentKind::noise_law: {
        const HVector noise = (y - zeta_) * (1.0 / cfg_.sigma);
        row[0] = norm_sq(project(noise, *top_));
        if (dominating_) {
          row[1] = dominating_->norm_sq(noise);
          row[2] = row[1] - norm_sq(project(noise, *diff_));
        }
        break;
      }
      case ExperimentKind::risk: {
        const double dev = est_variance(y, model, *u_, cfg_.tail) - cfg_.sigma * cfg_.sigma;
        row[0] = norm_sq(est_mean(y, *u_) - zeta_);
        row[1] = dev * dev;
        break;
      }
      case ExperimentKind::learning_curve: {
        row[0] = norm_sq(est_mean(y, *u_) - zeta_);
        for (std::size_t j = 0; j < prefixes_.size(); ++j) {
          row[j + 1] = norm_sq(project(y, prefixes_[j]) - zeta_);
        }
        break;
      }
    }
  }

  void reduce(const Outcomes& out, Report& report) const {
    const auto& model = *cfg_.model;
    const double m = static_cast<double>(cfg_.replicates);
    const double s2 = cfg_.sigma * cfg_.sigma;
    const auto col = [&](Eigen::Index j) { return out.data.col(j); };
    const auto count_flags = [&](Eigen::Index j) {
      return static_cast<std::size_t>(std::llround(col(j).sum()));
    };
    const double binomial_se = std::sqrt(cfg_.alpha * (1.0 - cfg_.alpha) / m);

    switch (cfg_.kind) {
      case ExperimentKind::coverage_known: {
        const Summary cov = summarize(col(0));
        report.checks.push_back(make_check("coverage", cov.mean, binomial_se, 1.0 - cfg_.alpha, "paper",
                                           kSigmas * binomial_se));
        report.values["half_width_mean"] = summarize(col(2)).mean;
        report.counts["zero_residual"] = count_flags(3);
        break;
      }
      case ExperimentKind::coverage_unknown: {
        const Summary cov = summarize(col(0));
        report.checks.push_back(make_check("coverage", cov.mean, binomial_se, 1.0 - cfg_.alpha, "paper",
                                           kSigmas * binomial_se, Sidedness::at_least));
        report.values["half_width_mean"] = summarize(col(2)).mean;
        const UnknownSigmaParams p = ci_params_unknown(model, *u_, cfg_.tail);
        report.values["tau"] = p.tau;
        report.values["lambda"] = p.lambda;
        report.values["n"] = static_cast<double>(p.n);
        report.counts["zero_residual"] = count_flags(3);
        break;
      }
      case ExperimentKind::level: {
        const Summary rate = summarize(col(0));
        const bool under_null = null_holds();
        if (under_null) {
          report.checks.push_back(make_check("rejection_rate", rate.mean, binomial_se, cfg_.alpha, "paper",
                                             kSigmas * binomial_se, Sidedness::at_most));
        } else {
          report.values["power"] = rate.mean;  // no analytic target
        }
        const Subspace u0 = null_subspace();
        const TestParams p = test_params(model, *u_, u0);
        report.values["lambda"] = p.lambda;
        report.values["mu"] = p.mu;
        report.values["n"] = static_cast<double>(p.n);
        report.values["m"] = static_cast<double>(p.m);
        report.values["prefactor"] = p.prefactor();
        report.counts["zero_residual"] = count_flags(2);
        break;
      }
      case ExperimentKind::unbiasedness: {
        const Eigen::VectorXd truth = basis_.transpose() * zeta_.coeffs();
        for (Eigen::Index j = 0; j < basis_.cols(); ++j) {
          const Summary s = summarize(col(j));
          report.checks.push_back(make_check(out.columns[static_cast<std::size_t>(j)], s.mean,
                                             s.standard_error, truth[j], "paper",
                                             kSigmas * s.standard_error));
        }
        const Summary s = summarize(col(basis_.cols()));
        report.checks.push_back(make_check("s2", s.mean, s.standard_error, s2, "paper", kSigmas * s.standard_error));
        break;
      }
      case ExperimentKind::moments: {
        const Moments mom = norm_sq_moments(*law_, cfg_.tail);
        const Summary mean = summarize(col(0));
        const Summary var = summarize_variance(col(0));
        report.checks.push_back(make_check("mean_norm_sq", mean.mean, mean.standard_error, mom.mean,
                                           "closed-form", kSigmas * mean.standard_error));
        report.checks.push_back(make_check("var_norm_sq", var.mean, var.standard_error, mom.variance,
                                           "closed-form", kSigmas * var.standard_error));
        if (u_) {
          const Moments pm = transformed_norm_sq_moments(*law_, *u_, cfg_.tail);
          const Summary pmean = summarize(col(1));
          const Summary pvar = summarize_variance(col(1));
          report.checks.push_back(make_check("mean_proj_norm_sq", pmean.mean, pmean.standard_error, pm.mean,
                                             "closed-form", kSigmas * pmean.standard_error));
          report.checks.push_back(make_check("var_proj_norm_sq", pvar.mean, pvar.standard_error, pm.variance,
                                             "closed-form", kSigmas * pvar.standard_error));
        }
        break;
      }
      case ExperimentKind::independence: {
        const double bound = kSigmas / std::sqrt(m);
        const double se = 1.0 / std::sqrt(m);
        report.checks.push_back(make_check("corr_functional_s2", correlation(col(0), col(1)), se, 0.0, "paper", bound));
        report.checks.push_back(
            make_check("corr_coef_residual", correlation(col(2), col(3)), se, 0.0, "paper", bound));
        break;
      }
      case ExperimentKind::noise_law: {
        const std::size_t count = cfg_.replicates;
        const double crit = ks_critical_5pct(count);
        const std::vector<double> s_draws(col(0).data(), col(0).data() + count);
        const double lambda = noise_.lambda;
        const double n = static_cast<double>(noise_.n);
        const double ks_s = ks_statistic(s_draws, [&](double x) { return gamma_cdf(0.5 * n, 0.5 / lambda, x); });
        report.checks.push_back(make_check("ks_s_norm_sq", ks_s, 0.0, 0.0, "paper", crit, Sidedness::at_most));
        report.values["lambda"] = lambda;
        report.values["n"] = n;
        if (dominating_) {
          const std::vector<double> t_draws(col(1).data(), col(1).data() + count);
          const double mu = *noise_.mu;
          const double mm = static_cast<double>(*noise_.m);
          const double ks_t =
              ks_statistic(t_draws, [&](double x) { return gamma_cdf(0.5 * mm, 0.5 / mu, x); });
          report.checks.push_back(make_check("ks_t_norm_sq", ks_t, 0.0, 0.0, "paper", crit, Sidedness::at_most));
          const double worst = col(2).minCoeff();
          report.checks.push_back(make_check("dominance_gap_min", worst, 0.0, 0.0, "paper",
                                             1e-12 * std::max(1.0, col(1).maxCoeff()), Sidedness::at_least));
          report.values["mu"] = mu;
          report.values["m"] = mm;
        }
        break;
      }
      case ExperimentKind::risk: {
        const double target_mean = risk_mean(model, *u_, cfg_.sigma, Tail::exclude);
        const double target_var = variance_est_risk(model, *u_, cfg_.sigma);
        const Summary rm = summarize(col(0));
        const Summary rv = summarize(col(1));
        report.checks.push_back(make_check("risk_mean", rm.mean, rm.standard_error, target_mean, "paper",
                                           kSigmas * rm.standard_error));
        report.checks.push_back(make_check("risk_variance_estimator", rv.mean, rv.standard_error, target_var,
                                           "paper", kSigmas * rv.standard_error));
        report.checks.push_back(make_check("risk_variance_estimator_bound", rv.mean, rv.standard_error,
                                           2.0 * s2 * s2, "paper", kSigmas * rv.standard_error,
                                           Sidedness::at_most));
        break;
      }
      case ExperimentKind::learning_curve: {
        for (std::size_t j = 0; j < cutoffs_.size(); ++j) {
          const Eigen::VectorXd diff = col(static_cast<Eigen::Index>(j + 1)) - col(0);
          const Summary s = summarize(diff);
          const double target = learning_gap(model, *u_, zeta_, cfg_.sigma, cutoffs_[j], Tail::exclude);
          report.checks.push_back(make_check("gap_" + std::to_string(cutoffs_[j]), s.mean, s.standard_error,
                                             target, "paper", kSigmas * s.standard_error + 1e-12));
        }
        break;
      }
    }
  }

 private:
  void need_u() const {
    if (!u_) throw config_error(std::string(to_string(cfg_.kind)) + " experiment needs a subspace U");
  }

  Subspace null_subspace() const {
    if (design_) return Subspace::span(*cfg_.model, design_->columns() * *cfg_.design->g0);
    return *u0_;
  }

  bool null_holds() const {
    const Subspace u0 = null_subspace();
    const double off = std::sqrt(norm_sq(zeta_ - project(zeta_, u0)));
    return off <= 1e-10 * std::max(1.0, std::sqrt(norm_sq(zeta_)));
  }

  const ExperimentConfig& cfg_;
  std::optional<DesignOperator> design_;
  std::optional<Subspace> u_;
  std::optional<Subspace> u0_;
  HVector zeta_;
  std::unique_ptr<GaussianLaw> law_;
  std::optional<HVector> b_;
  double target_functional_ = 0.0;
  Eigen::MatrixXd basis_;
  std::optional<Subspace> top_;
  std::optional<Subspace> diff_;
  std::optional<DominatingOperator> dominating_;
  NoiseDecomposition noise_{};
  std::vector<std::size_t> cutoffs_;
  std::vector<Subspace> prefixes_;
  std::vector<std::string> columns_;
};

Outcomes run_plan(const Plan& plan, const ExperimentConfig& cfg) {
  Outcomes out;
  out.columns = plan.columns();
  const auto width = static_cast<Eigen::Index>(out.columns.size());
  const std::size_t total = cfg.replicates;
  // Row-major scratch so each replicate writes one contiguous row.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows(static_cast<Eigen::Index>(total), width);

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));

  std::vector<std::exception_ptr> failures(workers);
  const auto work = [&](unsigned w) {
    try {
      const std::size_t begin = total * w / workers;
      const std::size_t end = total * (w + 1) / workers;
      HVector y(cfg.model->dim());
      for (std::size_t i = begin; i < end; ++i) {
        Rng rng = derive_stream(cfg.seed, i);
        plan.replicate(rng, y, rows.row(static_cast<Eigen::Index>(i)).data());
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  out.data = rows;
  return out;
}

void write_raw_csv(const std::string& path, const Outcomes& out) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::config, "cannot open " + path + " for writing");
  os << "replicate";
  for (const auto& c : out.columns) os << ',' << c;
  os << '\n' << std::setprecision(17);
  for (Eigen::Index i = 0; i < out.data.rows(); ++i) {
    os << i;
    for (Eigen::Index j = 0; j < out.data.cols(); ++j) os << ',' << out.data(i, j);
    os << '\n';
  }
}

std::string tail_convention(const ExperimentConfig& cfg) {
  switch (cfg.tail) {
    case Tail::exclude: return "truncated";
    case Tail::include: return "with-tail";
    case Tail::automatic: return cfg.model->is_analytic() ? "with-tail" : "truncated";
  }
  return "truncated";
}

}  // namespace

const char* to_string(ExperimentKind kind) noexcept {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw config_error("unknown experiment kind '" + name + "'");
}

const char* to_string(Tail tail) noexcept {
  switch (tail) {
    case Tail::automatic: return "auto";
    case Tail::include: return "include";
    case Tail::exclude: return "exclude";
  }
  return "exclude";
}

Tail tail_from_string(const std::string& name) {
  if (name == "auto" || name == "automatic") return Tail::automatic;
  if (name == "include" || name == "on" || name == "true") return Tail::include;
  if (name == "exclude" || name == "off" || name == "false") return Tail::exclude;
  throw config_error("unknown tail policy '" + name + "'");
}

const char* to_string(Sidedness s) noexcept {
  switch (s) {
    case Sidedness::two_sided: return "two-sided";
    case Sidedness::at_least: return "at-least";
    case Sidedness::at_most: return "at-most";
  }
  return "two-sided";
}

Check make_check(std::string name, double estimate, double standard_error, double target,
                 std::string provenance, double tolerance, Sidedness sidedness) {
  Check c;
  c.name = std::move(name);
  c.estimate = estimate;
  c.standard_error = standard_error;
  c.target = target;
  c.provenance = std::move(provenance);
  c.tolerance = tolerance;
  c.sidedness = sidedness;
  switch (sidedness) {
    case Sidedness::two_sided: c.pass = std::abs(estimate - target) <= tolerance; break;
    case Sidedness::at_least: c.pass = estimate >= target - tolerance; break;
    case Sidedness::at_most: c.pass = estimate <= target + tolerance; break;
  }
  return c;
}

bool Report::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Summary summarize(const Eigen::Ref<const Eigen::VectorXd>& values) {
  const auto m = static_cast<double>(values.size());
  if (values.size() == 0) throw Error(ErrorCode::invalid_argument, "cannot summarize an empty sample");
  const double mean = values.mean();
  if (values.size() == 1) return {mean, 0.0};
  const double var = (values.array() - mean).square().sum() / (m - 1.0);
  return {mean, std::sqrt(var / m)};
}

Summary summarize_variance(const Eigen::Ref<const Eigen::VectorXd>& values) {
  const auto m = static_cast<double>(values.size());
  if (values.size() < 2) throw Error(ErrorCode::invalid_argument, "variance needs two draws");
  const double mean = values.mean();
  const Eigen::ArrayXd centered = values.array() - mean;
  const double var = centered.square().sum() / (m - 1.0);
  const double m4 = centered.square().square().sum() / m;
  return {var, std::sqrt(std::max(0.0, m4 - var * var) / m)};
}

double correlation(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "correlation needs two samples of equal length >= 2");
  }
  const Eigen::ArrayXd ca = a.array() - a.mean();
  const Eigen::ArrayXd cb = b.array() - b.mean();
  const double denom = std::sqrt(ca.square().sum() * cb.square().sum());
  return denom > 0.0 ? (ca * cb).sum() / denom : 0.0;
}

Outcomes run_replicates(const ExperimentConfig& config) {
  const Plan plan(config);
  return run_plan(plan, config);
}

Report run_experiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const Plan plan(config);
  const Outcomes out = run_plan(plan, config);
  if (!config.raw_csv.empty()) write_raw_csv(config.raw_csv, out);
  Report report;
  report.kind = config.kind;
  report.seed = config.seed;
  report.replicates = config.replicates;
  report.tail_convention = tail_convention(config);
  plan.reduce(out, report);
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const Report& report, bool with_runtime) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(report.kind);
  j["seed"] = report.seed;
  j["replicates"] = report.replicates;
  j["tail_convention"] = report.tail_convention;
  j["passed"] = report.passed();
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"estimate", c.estimate},
                      {"standard_error", c.standard_error},
                      {"target", c.target},
                      {"provenance", c.provenance},
                      {"tolerance", c.tolerance},
                      {"sidedness", to_string(c.sidedness)},
                      {"pass", c.pass}});
  }
  j["values"] = report.values;
  j["counts"] = report.counts;
  if (with_runtime) j["runtime_seconds"] = report.runtime_seconds;
  return j.dump(2);
}

}  // namespace hilbert_gauss
