#include "hilbert_gauss/io.hpp"

#include "hilbert_gauss/error.hpp"
#include "hilbert_gauss/processes.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hilbert_gauss {

namespace {

Error config_error(const std::string& what) { return Error(ErrorCode::config, what); }

std::size_t mode_to_index(const Json& mode, std::size_t dim) {
  if (!mode.is_number_integer()) throw config_error("modes must be integers");
  const auto k = mode.get<long long>();
  if (k < 1 || static_cast<std::size_t>(k) > dim) {
    throw config_error("mode " + std::to_string(k) + " outside 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(k - 1);
}

std::vector<double> numbers(const Json& j, const char* what) {
  if (!j.is_array()) throw config_error(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw config_error(std::string(what) + " must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::vector<std::string>> read_csv(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    rows.push_back(std::move(cells));
  }
  return rows;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw config_error("not a number: '" + s + "'");
  }
  if (used != s.size()) throw config_error("not a number: '" + s + "'");
  return v;
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw config_error(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw config_error("cannot open " + path);
  try {
    return Json::parse(is);
  } catch (const Json::parse_error& e) {
    throw config_error(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw config_error("cannot open " + path + " for writing");
  os << text;
}

SpectralModel model_from_json(const Json& j) {
  if (!j.is_object()) throw config_error("model must be an object");
  const std::string basis = get_or<std::string>(j, "basis", j.contains("eigenvalues") ? "custom" : "");
  if (j.contains("eigenvalues")) {
    std::vector<double> eigs = numbers(j.at("eigenvalues"), "eigenvalues");
    if (j.contains("dim") && get_or<std::size_t>(j, "dim", 0) != eigs.size()) {
      throw config_error("dim differs from the number of eigenvalues");
    }
    return SpectralModel(std::move(eigs), get_or<double>(j, "tail_trace", 0.0), basis_from_string(basis));
  }
  const auto dim = get_or<std::size_t>(j, "dim", 256);
  switch (basis_from_string(basis)) {
    case Basis::wiener: return wiener_model(dim);
    case Basis::bridge: return bridge_model(dim);
    case Basis::abstract: break;
  }
  throw config_error("custom model needs eigenvalues");
}

Json model_to_json(const SpectralModel& model) {
  Json j;
  j["basis"] = to_string(model.basis());
  j["dim"] = model.dim();
  j["eigenvalues"] = std::vector<double>(model.eigenvalues().begin(), model.eigenvalues().end());
  j["tail_trace"] = model.tail_trace();
  return j;
}

Subspace subspace_from_json(const Json& j, const SpectralModel& model) {
  const std::size_t dim = model.dim();
  if (j.is_array()) return subspace_from_json(Json{{"modes", j}}, model);
  if (!j.is_object()) throw config_error("subspace must be an object or a mode list");
  if (j.contains("modes")) {
    std::vector<std::size_t> idx;
    for (const auto& m : j.at("modes")) idx.push_back(mode_to_index(m, dim));
    return Subspace::indices(dim, std::move(idx));
  }
  if (j.contains("frame")) return Subspace::span(model, matrix_from_columns_json(j.at("frame"), dim));
  throw config_error("subspace needs 'modes' or 'frame'");
}

Json subspace_to_json(const Subspace& s) {
  Json j;
  if (s.kind() == Subspace::Kind::index_set) {
    std::vector<std::size_t> modes;
    for (std::size_t i : s.index_list()) modes.push_back(i + 1);
    j["modes"] = modes;
    if (s.includes_tail()) j["tail"] = true;
    return j;
  }
  const Eigen::MatrixXd& f = s.frame_columns();
  Json cols = Json::array();
  for (Eigen::Index c = 0; c < f.cols(); ++c) {
    cols.push_back(std::vector<double>(f.col(c).data(), f.col(c).data() + f.rows()));
  }
  j[s.kind() == Subspace::Kind::frame ? "frame" : "frame_complement"] = cols;
  return j;
}

HVector vector_from_json(const Json& j, std::size_t dim) {
  HVector v(dim);
  if (j.is_object() && j.contains("coeffs")) return vector_from_json(j.at("coeffs"), dim);
  if (j.is_array()) {
    const std::vector<double> c = numbers(j, "vector");
    if (c.size() > dim) throw config_error("vector longer than the model truncation");
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
    return v;
  }
  if (j.is_object() && j.contains("modes") && j.contains("values")) {
    const Json& modes = j.at("modes");
    const std::vector<double> values = numbers(j.at("values"), "values");
    if (!modes.is_array() || modes.size() != values.size()) {
      throw config_error("'modes' and 'values' must have equal length");
    }
    for (std::size_t i = 0; i < values.size(); ++i) v[mode_to_index(modes[i], dim)] += values[i];
    return HVector(v.coeffs());
  }
  throw config_error("vector must be an array or {modes, values}");
}

Json vector_to_json(const HVector& v) {
  return std::vector<double>(v.coeffs().data(), v.coeffs().data() + v.coeffs().size());
}

Eigen::MatrixXd matrix_from_columns_json(const Json& j, std::size_t rows) {
  if (!j.is_array() || j.empty()) throw config_error("columns must be a nonempty array");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) {
    m.col(static_cast<Eigen::Index>(c)) = vector_from_json(j[c], rows).coeffs();
  }
  return m;
}

HVector read_observation(const std::string& path, const SpectralModel& model) {
  const bool is_csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  if (!is_csv) return vector_from_json(read_json_file(path), model.dim());

  std::ifstream is(path);
  if (!is) throw config_error("cannot open " + path);
  auto rows = read_csv(is);
  if (rows.empty()) throw config_error(path + ": empty observation");
  std::string kind = "coeff";
  if (rows[0].size() == 2 && rows[0][0] == "t") {
    kind = "trajectory";
    rows.erase(rows.begin());
  } else if (rows[0].size() == 2 && rows[0][0] == "mode") {
    rows.erase(rows.begin());
  }
  if (kind == "trajectory") {
    std::vector<double> t;
    std::vector<double> y;
    for (const auto& r : rows) {
      if (r.size() != 2) throw config_error(path + ": expected two columns t,y");
      t.push_back(parse_double(r[0]));
      y.push_back(parse_double(r[1]));
    }
    return project_trajectory(model, Grid(std::move(t)), y);
  }
  HVector v(model.dim());
  for (const auto& r : rows) {
    if (r.size() != 2) throw config_error(path + ": expected two columns mode,coeff");
    const double mode = parse_double(r[0]);
    v[mode_to_index(Json(static_cast<long long>(mode)), model.dim())] = parse_double(r[1]);
  }
  return v;
}

std::string trajectory_csv(const SpectralModel& model, const HVector& y, std::size_t points) {
  const Grid grid = Grid::uniform(points);
  const std::vector<double> values = eval_vector(model, y, grid);
  std::ostringstream os;
  os << "t,y\n" << std::setprecision(17);
  for (std::size_t i = 0; i < grid.size(); ++i) os << grid[i] << ',' << values[i] << '\n';
  return os.str();
}

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw config_error("config must be an object");
  ExperimentConfig cfg;
  try {
    cfg.kind = experiment_kind_from_string(get_or<std::string>(j, "kind", "moments"));
    if (!j.contains("model")) throw config_error("config needs a model");
    auto model = std::make_shared<const SpectralModel>(model_from_json(j.at("model")));
    cfg.model = model;
    const std::size_t dim = model->dim();
    if (j.contains("subspace")) cfg.u = subspace_from_json(j.at("subspace"), *model);
    if (j.contains("null_subspace")) cfg.u0 = subspace_from_json(j.at("null_subspace"), *model);
    if (j.contains("zeta")) cfg.zeta = vector_from_json(j.at("zeta"), dim);
    if (j.contains("functional")) cfg.functional = vector_from_json(j.at("functional"), dim);
    if (j.contains("design")) {
      const Json& d = j.at("design");
      DesignSpec spec;
      spec.columns = matrix_from_columns_json(d.at("columns"), dim);
      const std::vector<double> beta = numbers(d.at("beta"), "beta");
      spec.beta = Eigen::Map<const Eigen::VectorXd>(beta.data(), static_cast<Eigen::Index>(beta.size()));
      if (d.contains("c")) {
        const std::vector<double> c = numbers(d.at("c"), "c");
        spec.c = Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
      }
      if (d.contains("g0")) spec.g0 = matrix_from_columns_json(d.at("g0"), static_cast<std::size_t>(spec.columns.cols()));
      cfg.design = std::move(spec);
    }
    cfg.sigma = get_or<double>(j, "sigma", cfg.sigma);
    cfg.alpha = get_or<double>(j, "alpha", cfg.alpha);
    cfg.replicates = get_or<std::size_t>(j, "replicates", cfg.replicates);
    cfg.seed = get_or<std::uint64_t>(j, "seed", cfg.seed);
    cfg.threads = get_or<unsigned>(j, "threads", cfg.threads);
    if (j.contains("tail")) {
      const Json& t = j.at("tail");
      cfg.tail = t.is_boolean() ? (t.get<bool>() ? Tail::include : Tail::exclude)
                                : tail_from_string(t.get<std::string>());
    }
    cfg.cutoffs = get_or<std::vector<std::size_t>>(j, "cutoffs", {});
    cfg.raw_csv = get_or<std::string>(j, "raw_csv", "");
  } catch (const Json::exception& e) {
    throw config_error(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::config) throw;
    throw config_error(e.what());
  }
  if (cfg.replicates < 1) throw config_error("replicates must be at least 1");
  if (!(cfg.sigma > 0.0)) throw config_error("sigma must be positive");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw config_error("alpha must lie in (0, 1)");
  return cfg;
}

}  // namespace hilbert_gauss
