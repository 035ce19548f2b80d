// hilbert-gauss: simulate, estimate, interval, test, regression and Monte
// Carlo front end.
//
// Exit status: 0 success, 1 a Monte Carlo check failed, 2 bad input or
// configuration.

#include "hilbert_gauss/error.hpp"
#include "hilbert_gauss/estimators.hpp"
#include "hilbert_gauss/harness.hpp"
#include "hilbert_gauss/inference.hpp"
#include "hilbert_gauss/io.hpp"
#include "hilbert_gauss/processes.hpp"
#include "hilbert_gauss/random.hpp"
#include "hilbert_gauss/regression.hpp"
#include "hilbert_gauss/sampling.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace hg = hilbert_gauss;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitConfig = 2;

// Inline JSON when the argument looks like JSON, otherwise a file path.
hg::Json json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return hg::Json::parse(arg);
    } catch (const hg::Json::parse_error& e) {
      throw hg::Error(hg::ErrorCode::config, std::string("inline JSON: ") + e.what());
    }
  }
  return hg::read_json_file(arg);
}

std::string dump(const hg::Json& j) { return j.dump(2) + "\n"; }

hg::Json interval_json(const hg::Interval& ci) {
  return {{"center", ci.center}, {"half_width", ci.half_width}, {"level", ci.level},
          {"lower", ci.lower()}, {"upper", ci.upper()}};
}

hg::Json test_json(const hg::TestResult& r) {
  return {{"statistic", r.statistic},
          {"threshold", r.threshold},
          {"reject", r.reject},
          {"params", {{"lambda", r.params.lambda}, {"mu", r.params.mu}, {"n", r.params.n}, {"m", r.params.m}}}};
}

struct Common {
  std::string model = R"({"basis": "wiener", "dim": 256})";
  std::string out = "-";
  std::string format = "json";
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--model", c.model, "Model file or inline JSON")->capture_default_str();
  cmd->add_option("--out", c.out, "Output path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian mean and variance inference in spectral Hilbert-space models"};
  app.require_subcommand(1);
  Common common;

  // simulate
  auto* sim = app.add_subcommand("simulate", "Draw Y ~ N(zeta, sigma^2 Q)");
  add_common(sim, common);
  std::string zeta_arg;
  double sigma = 1.0;
  std::size_t points = 512;
  sim->add_option("--zeta", zeta_arg, "Mean coefficients (JSON vector or file)");
  sim->add_option("--sigma", sigma, "Noise scale")->capture_default_str();
  sim->add_option("--points", points, "Grid points for CSV trajectories")->capture_default_str();

  // estimate / ci / test
  std::string subspace_arg;
  std::string null_arg;
  std::string obs_path;
  std::string functional_arg;
  std::string tail_arg = "auto";
  double alpha = 0.05;
  std::optional<double> known_sigma;

  auto* est = app.add_subcommand("estimate", "Point estimates of zeta, <b, zeta> and sigma^2");
  add_common(est, common);
  auto* ci = app.add_subcommand("ci", "Confidence interval for <b, zeta>");
  add_common(ci, common);
  auto* tst = app.add_subcommand("test", "Test zeta in U0 against zeta in U");
  add_common(tst, common);
  for (auto* cmd : {est, ci, tst}) {
    cmd->add_option("--subspace", subspace_arg, "U: {\"modes\": [...]} or {\"frame\": [...]}")->required();
    cmd->add_option("--obs", obs_path, "Observation file (.json coefficients, .csv)")->required();
    cmd->add_option("--tail", tail_arg, "Tail trace policy")->check(CLI::IsMember({"auto", "include", "exclude"}))
        ->capture_default_str();
  }
  est->add_option("--functional", functional_arg, "b as a JSON vector or file");
  ci->add_option("--functional", functional_arg, "b as a JSON vector or file")->required();
  for (auto* cmd : {ci, tst}) cmd->add_option("--alpha", alpha, "Significance level")->capture_default_str();
  ci->add_option("--sigma", known_sigma, "Known sigma (omit for the unknown-sigma interval)");
  tst->add_option("--null", null_arg, "U0 subspace")->required();

  // regress
  auto* reg = app.add_subcommand("regress", "Least squares with a design operator");
  add_common(reg, common);
  std::string design_arg;
  reg->add_option("--design", design_arg, "{\"columns\": [...], \"c\": [...], \"g0\": [...]}")->required();
  reg->add_option("--obs", obs_path, "Observation file")->required();
  reg->add_option("--alpha", alpha, "Significance level")->capture_default_str();
  reg->add_option("--sigma", known_sigma, "Known sigma");
  reg->add_option("--tail", tail_arg, "Tail trace policy")->check(CLI::IsMember({"auto", "include", "exclude"}))
      ->capture_default_str();

  // mc
  auto* mc = app.add_subcommand("mc", "Run a Monte Carlo experiment");
  std::string config_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::size_t> replicates;
  std::optional<unsigned> threads;
  std::string raw_csv;
  mc->add_option("--config", config_path, "Experiment config (JSON)")->required();
  mc->add_option("--seed", seed_override, "Override the config seed");
  mc->add_option("--replicates", replicates, "Override the replicate count");
  mc->add_option("--threads", threads, "Worker threads (0: all cores)");
  mc->add_option("--raw-csv", raw_csv, "Stream per-replicate outcomes to CSV");
  mc->add_option("--out", common.out, "Report path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*mc) {
      hg::ExperimentConfig cfg = hg::config_from_json(hg::read_json_file(config_path));
      if (seed_override) cfg.seed = *seed_override;
      if (replicates) cfg.replicates = *replicates;
      if (threads) cfg.threads = *threads;
      if (!raw_csv.empty()) cfg.raw_csv = raw_csv;
      const hg::Report report = hg::run_experiment(cfg);
      hg::write_text(common.out, hg::report_to_json(report) + "\n");
      return report.passed() ? 0 : kExitFailedCheck;
    }

    const auto model = std::make_shared<const hg::SpectralModel>(hg::model_from_json(json_arg(common.model)));
    const hg::Tail tail = hg::tail_from_string(tail_arg);

    if (*sim) {
      const hg::HVector zeta = zeta_arg.empty() ? hg::HVector(model->dim())
                                                : hg::vector_from_json(json_arg(zeta_arg), model->dim());
      const hg::GaussianLaw law(model, zeta, sigma);
      hg::Rng rng = hg::derive_stream(common.seed, 0);
      const hg::HVector y = hg::sample(law, rng);
      if (common.format == "csv") {
        if (model->is_analytic()) {
          hg::write_text(common.out, hg::trajectory_csv(*model, y, points));
        } else {
          std::ostringstream os;
          os.precision(17);
          os << "mode,coeff\n";
          for (std::size_t i = 0; i < y.size(); ++i) os << i + 1 << ',' << y[i] << '\n';
          hg::write_text(common.out, os.str());
        }
      } else {
        hg::write_text(common.out, dump({{"coeffs", hg::vector_to_json(y)}}));
      }
      return 0;
    }

    const hg::HVector y = hg::read_observation(obs_path, *model);

    if (*reg) {
      const hg::Json design = json_arg(design_arg);
      const hg::DesignOperator a(*model, hg::matrix_from_columns_json(design.at("columns"), model->dim()));
      const Eigen::VectorXd beta = hg::lse(a, y);
      hg::Json out;
      out["beta"] = std::vector<double>(beta.data(), beta.data() + beta.size());
      out["intervals"] = hg::Json::array();
      if (design.contains("c")) {
        const auto cv = design.at("c").get<std::vector<double>>();
        const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(cv.data(), static_cast<Eigen::Index>(cv.size()));
        const hg::Interval iv = known_sigma ? hg::ci_beta_known(c, a, y, *model, *known_sigma, alpha)
                                            : hg::ci_beta_unknown(c, a, y, *model, alpha, tail);
        out["intervals"].push_back(interval_json(iv));
      }
      if (design.contains("g0")) {
        const Eigen::MatrixXd g0 = hg::matrix_from_columns_json(design.at("g0"), a.params());
        out["test"] = test_json(hg::test_beta(y, a, g0, *model, alpha));
      }
      hg::write_text(common.out, dump(out));
      return 0;
    }

    const hg::Subspace u = hg::subspace_from_json(json_arg(subspace_arg), *model);

    if (*est) {
      hg::Json out;
      out["mean_coeffs"] = hg::vector_to_json(hg::est_mean(y, u));
      if (!functional_arg.empty()) {
        out["functional"] = hg::est_functional(hg::vector_from_json(json_arg(functional_arg), model->dim()), y, u);
      }
      out["s2"] = hg::est_variance(y, *model, u, tail);
      hg::write_text(common.out, dump(out));
      return 0;
    }
    if (*ci) {
      const hg::HVector b = hg::vector_from_json(json_arg(functional_arg), model->dim());
      const hg::Interval iv = known_sigma ? hg::ci_known(b, y, *model, u, *known_sigma, alpha)
                                          : hg::ci_unknown(b, y, *model, u, alpha, tail);
      hg::write_text(common.out, dump(interval_json(iv)));
      return 0;
    }
    if (*tst) {
      const hg::Subspace u0 = hg::subspace_from_json(json_arg(null_arg), *model);
      hg::write_text(common.out, dump(test_json(hg::test_subspace(y, *model, u, u0, alpha))));
      return 0;
    }
  } catch (const hg::Error& e) {
    std::cerr << "hilbert-gauss: " << e.what() << '\n';
    return kExitConfig;
  } catch (const hg::Json::exception& e) {
    std::cerr << "hilbert-gauss: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
