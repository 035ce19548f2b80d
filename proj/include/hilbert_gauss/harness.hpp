#pragma once

// Monte Carlo experiment runner. Each replicate draws from its own stream
// derive_stream(seed, i), outcomes are stored by replicate index and reduced
// in index order, so reports do not depend on the thread count.

#include "hilbert_gauss/spectral.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hilbert_gauss {

enum class ExperimentKind {
  coverage_known,
  coverage_unknown,
  level,
  unbiasedness,
  moments,
  independence,
  noise_law,
  risk,
  learning_curve,
};

const char* to_string(ExperimentKind kind) noexcept;
ExperimentKind experiment_kind_from_string(const std::string& name);
const char* to_string(Tail tail) noexcept;
Tail tail_from_string(const std::string& name);

/// Regression variant of the coverage and level experiments: zeta = A beta,
/// U = ran A, the functional is <c, beta> and the null is beta in span(g0).
struct DesignSpec {
  Eigen::MatrixXd columns;  // N x p
  Eigen::VectorXd beta;
  std::optional<Eigen::VectorXd> c;
  std::optional<Eigen::MatrixXd> g0;  // p x p0
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::moments;
  std::shared_ptr<const SpectralModel> model;
  std::optional<Subspace> u;
  std::optional<Subspace> u0;
  std::optional<HVector> zeta;        // defaults to 0
  std::optional<HVector> functional;  // b
  std::optional<DesignSpec> design;
  double sigma = 1.0;
  double alpha = 0.05;
  std::size_t replicates = 100000;
  std::uint64_t seed = 1;
  Tail tail = Tail::exclude;
  unsigned threads = 0;  // 0: hardware concurrency
  std::vector<std::size_t> cutoffs;  // learning_curve; empty means 0..|U|
  std::string raw_csv;               // per-replicate outcomes, optional
};

enum class Sidedness { two_sided, at_least, at_most };
const char* to_string(Sidedness s) noexcept;

/// One comparison of a Monte Carlo estimate with an analytic target.
/// two_sided: |estimate - target| <= tolerance; at_least: estimate >=
/// target - tolerance; at_most: estimate <= target + tolerance.
struct Check {
  std::string name;
  double estimate = 0.0;
  double standard_error = 0.0;
  double target = 0.0;
  std::string provenance;  // paper | closed-form | oracle
  double tolerance = 0.0;
  Sidedness sidedness = Sidedness::two_sided;
  bool pass = false;
};

Check make_check(std::string name, double estimate, double standard_error, double target,
                 std::string provenance, double tolerance, Sidedness sidedness = Sidedness::two_sided);

struct Report {
  ExperimentKind kind = ExperimentKind::moments;
  std::uint64_t seed = 0;
  std::size_t replicates = 0;
  std::string tail_convention;
  std::vector<Check> checks;
  std::map<std::string, double> values;  // unchecked quantities (widths, power, ...)
  std::map<std::string, std::size_t> counts;
  double runtime_seconds = 0.0;

  bool passed() const noexcept;
};

/// Per-replicate outcomes, row i belonging to replicate i.
struct Outcomes {
  std::vector<std::string> columns;
  Eigen::MatrixXd data;  // replicates x columns
};

/// Runs the replicates of an experiment without reducing them.
Outcomes run_replicates(const ExperimentConfig& config);

Report run_experiment(const ExperimentConfig& config);

/// JSON rendering; `with_runtime` false drops the only nondeterministic field.
std::string report_to_json(const Report& report, bool with_runtime = true);

/// Mean and standard error of a column.
struct Summary {
  double mean;
  double standard_error;
};
Summary summarize(const Eigen::Ref<const Eigen::VectorXd>& values);

/// Sample variance with the standard error sqrt((m4 - s^4) / M).
Summary summarize_variance(const Eigen::Ref<const Eigen::VectorXd>& values);

double correlation(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b);

}  // namespace hilbert_gauss
