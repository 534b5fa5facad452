#pragma once

// Experiment configuration, embedded presets, and the command
// implementations behind the fracgrad executable.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracgrad/dynamics.hpp"
#include "fracgrad/hum.hpp"
#include "fracgrad/observability.hpp"
#include "fracgrad/sensing.hpp"
#include "fracgrad/spectral.hpp"

namespace fracgrad {

using Json = nlohmann::json;

/// Initial condition: explicit coefficients, potentials a_q (the state is
/// grad* p*_omega g_a), or the counterexample field g restricted to
/// the region.
struct InitialCondition {
  enum class Kind { coefficients, potentials, counterexample } kind =
      Kind::coefficients;
  std::vector<std::pair<Mode, double>> values;
};

struct ExperimentConfig {
  double alpha = 0.8;
  double horizon = 1.0;
  int dimension = 2;
  int truncation = 4;       ///< M, state basis
  int gram_truncation = 3;  ///< M_gram, potential basis
  std::vector<Box> region;  ///< empty means the whole domain
  Json sensors = Json::array();
  int panels = 16;
  int grading = 0;
  bool two_sided = false;
  NoiseSpec noise;
  HumConfig hum;
  Weighting weighting = Weighting::none;
  int gram_panels = 32;
  std::optional<InitialCondition> initial;
  std::optional<std::string> observations;
  std::optional<std::string> output_dir;
  Json source;  ///< normalised echo of the input document

  FracOrder order() const { return FracOrder(alpha); }
  Region omega() const;
  SensorSuite suite() const;
  TimeGrid time_grid() const;
  BasisPtr state_basis() const;
  BasisPtr potential_basis() const;
};

/// Parses and validates; throws ConfigError naming the offending field.
ExperimentConfig parse_config(const Json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

Sensor parse_sensor(const Json& j, int dimension, const std::string& field);
Distribution parse_distribution(const Json& j, int dimension,
                                const std::string& field);

std::vector<std::string> preset_names();
/// Throws ConfigError for an unknown name.
Json preset_document(const std::string& name);

/// Initial state on the configured state basis.
SpectralField initial_state(const ExperimentConfig& cfg);

/// g = grad xi_13 / (2 pi^2), whose adjoint gradient is 5 xi_13.
VectorFn counterexample_field();

// File formats

void write_atomic(const std::filesystem::path& path, const std::string& text);
std::string observations_csv(const ObservationRecord& rec);
ObservationRecord parse_observations_csv(const std::string& text, double horizon);
ObservationRecord read_observations(const std::filesystem::path& path,
                                    double horizon);
/// x1,x2,v on a uniform 101 x 101 grid (x1,v on 101 points in 1-D).
std::string scalar_grid_csv(const ScalarFn& f, int dimension);
/// x1,x2,g1,g2 (x1,g1 in 1-D); values are zeroed outside `mask` if given.
std::string vector_grid_csv(const VectorFn& g, int dimension,
                            const Region* mask = nullptr);

// Commands: each returns the report payload and writes its files to `out`.

struct RunContext {
  std::filesystem::path out;
  bool timing = false;
  int threads = 1;
};

std::string mlf_table(double alpha, double beta, const std::vector<double>& zs);
Json cmd_simulate(const ExperimentConfig& cfg, const RunContext& ctx);
Json cmd_strategic(const ExperimentConfig& cfg, const RunContext& ctx);
Json cmd_gram(const ExperimentConfig& cfg, const RunContext& ctx);
/// Sets `converged` in the payload; the caller maps false to exit code 4.
Json cmd_reconstruct(const ExperimentConfig& cfg, const RunContext& ctx);
Json cmd_counterexample(const ExperimentConfig& cfg, const RunContext& ctx);

/// Envelope {tool, version, command, config, payload[, wall_time_s]}.
Json envelope(const std::string& command, const ExperimentConfig& cfg,
              Json payload, std::optional<double> wall_time);

// JSON views of the core reports.
Json to_json(const StrategicReport& r);
Json to_json(const GramReport& r);
Json to_json(const GMatrixSet& g);

}  // namespace fracgrad
