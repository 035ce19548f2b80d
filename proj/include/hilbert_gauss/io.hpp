#pragma once

// JSON and CSV readers/writers for models, subspaces, observations and
// experiment configurations. Modes are 1-based in every file format.
//
// Model:     {"basis": "wiener", "dim": 256}
//            {"dim": 3, "eigenvalues": [1, 1, 0.5], "tail_trace": 0}
// Subspace:  {"modes": [4, 5, 6]}  or  {"frame": [[...], [...]]} (columns)
// Vector:    [c_1, ..., c_k] (zero-padded)  or  {"modes": [4], "values": [0.5]}
// Observation files: JSON vector (optionally under "coeffs"), CSV "mode,coeff"
// coefficients, or CSV "t,y" trajectories projected by quadrature.

#include "hilbert_gauss/harness.hpp"
#include "hilbert_gauss/spectral.hpp"

#include <json.hpp>

#include <string>

namespace hilbert_gauss {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);
/// Writes to `path`, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

SpectralModel model_from_json(const Json& j);
Json model_to_json(const SpectralModel& model);

Subspace subspace_from_json(const Json& j, const SpectralModel& model);
Json subspace_to_json(const Subspace& s);

HVector vector_from_json(const Json& j, std::size_t dim);
Json vector_to_json(const HVector& v);

Eigen::MatrixXd matrix_from_columns_json(const Json& j, std::size_t rows);

HVector read_observation(const std::string& path, const SpectralModel& model);

/// Writes "t,y" rows of the trajectory sum_k y_k e_k on the grid.
std::string trajectory_csv(const SpectralModel& model, const HVector& y, std::size_t points);

ExperimentConfig config_from_json(const Json& j);

}  // namespace hilbert_gauss
