#include <map>

#include "fracgrad/errors.hpp"
#include "fracgrad/experiment.hpp"

namespace fracgrad {

namespace {

// Filament {1/2} x [0,1] with f = sin(pi x2), g = grad xi_13 / (2 pi^2).
constexpr const char* kCounterexample = R"({
  "alpha": 0.5, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 4, "M_gram": 3},
  "sensors": [{"kind": "filament", "fixed": "x1", "at": 0.5, "range": [0.0, 1.0],
               "distribution": {"type": "sine_product", "k1": 1, "k2": 1}}],
  "time_grid": {"panels": 4, "grading": 1},
  "hum": {"weighting": "compensated"},
  "initial_condition": {"preset": "counterexample"}
})";

constexpr const char* kCounterexampleRegional = R"({
  "alpha": 0.5, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 4, "M_gram": 3},
  "region": [[0.0, 1.0, 0.0, 0.16666666666666666]],
  "sensors": [{"kind": "filament", "fixed": "x1", "at": 0.5, "range": [0.0, 1.0],
               "distribution": {"type": "sine_product", "k1": 1, "k2": 1}}],
  "time_grid": {"panels": 4, "grading": 1},
  "hum": {"weighting": "compensated"},
  "initial_condition": {"preset": "counterexample"}
})";

constexpr const char* kCase1Zone = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 3, "M_gram": 3},
  "region": [[0.0, 1.0, 0.0, 0.5]],
  "sensors": [{"kind": "zone", "box": [0.2, 0.6, 0.3, 0.7],
               "distribution": {"type": "sine_product",
                                "k1": 1.4142135623730951, "k2": 1.4142135623730951}}],
  "time_grid": {"panels": 16},
  "initial_condition": {"coefficients": [{"mode": [1, 1], "value": 1.0},
                                         {"mode": [2, 3], "value": 0.5}]}
})";

constexpr const char* kCase2Pointwise = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 3, "M_gram": 3},
  "region": [[0.0, 1.0, 0.0, 0.5]],
  "sensors": [{"kind": "pointwise", "point": [0.3183098861837907, 0.41421356237309515]}],
  "time_grid": {"panels": 16},
  "initial_condition": {"coefficients": [{"mode": [1, 1], "value": 1.0},
                                         {"mode": [2, 3], "value": 0.5}]}
})";

constexpr const char* kCase3Filament = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 3, "M_gram": 3},
  "region": [[0.0, 1.0, 0.0, 0.5]],
  "sensors": [{"kind": "filament", "fixed": "x2", "at": 0.4472135954999579,
               "range": [0.1, 0.9],
               "distribution": {"type": "sine_product", "k1": 1.4142135623730951, "k2": 1}}],
  "time_grid": {"panels": 16},
  "initial_condition": {"coefficients": [{"mode": [1, 1], "value": 1.0},
                                         {"mode": [2, 3], "value": 0.5}]}
})";

constexpr const char* kStrategicHalf = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 1,
  "truncation": {"M": 3, "M_gram": 3},
  "sensors": [{"kind": "pointwise", "point": [0.5]}]
})";

constexpr const char* kStrategicInvPi = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 1,
  "truncation": {"M": 12, "M_gram": 4},
  "sensors": [{"kind": "pointwise", "point": [0.3183098861837907]}]
})";

constexpr const char* kHeatLimit = R"({
  "alpha": 1.0, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 8, "M_gram": 3},
  "sensors": [
    {"kind": "zone", "box": [0.1, 0.4, 0.2, 0.7],
     "distribution": {"type": "sine_product", "k1": 1.4142135623730951, "k2": 1.4142135623730951}},
    {"kind": "pointwise", "point": [0.6071067811865475, 0.3183098861837907]},
    {"kind": "filament", "fixed": "x2", "at": 0.4472135954999579, "range": [0.1, 0.9],
     "distribution": {"type": "sine_product", "k1": 1.4142135623730951, "k2": 1}}],
  "time_grid": {"panels": 8},
  "initial_condition": {"coefficients": [{"mode": [1, 1], "value": 1.0},
                                         {"mode": [2, 3], "value": 0.5},
                                         {"mode": [5, 2], "value": -0.25},
                                         {"mode": [8, 7], "value": 0.125}]}
})";

constexpr const char* kObservable3 = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 3, "M_gram": 3},
  "region": [[0.0, 1.0, 0.0, 0.5]],
  "sensors": [
    {"kind": "pointwise", "point": [0.6071067811865475, 0.3183098861837907]},
    {"kind": "pointwise", "point": [0.5773502691896257, 0.36787944117144233]},
    {"kind": "pointwise", "point": [0.6283185307179586, 0.5360679774997898]}],
  "time_grid": {"panels": 16}
})";

constexpr const char* kZeroSensor = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 3, "M_gram": 2},
  "sensors": [{"kind": "zone", "box": [0.0, 1.0, 0.0, 1.0],
               "distribution": {"type": "constant", "value": 0.0}}],
  "time_grid": {"panels": 8},
  "initial_condition": {"coefficients": [{"mode": [1, 1], "value": 1.0}]}
})";

constexpr const char* kHumSynthetic = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 2, "M_gram": 2},
  "region": [[0.0, 1.0, 0.0, 0.5]],
  "sensors": [
    {"kind": "pointwise", "point": [0.6071067811865475, 0.3183098861837907]},
    {"kind": "pointwise", "point": [0.5773502691896257, 0.36787944117144233]},
    {"kind": "pointwise", "point": [0.6283185307179586, 0.5360679774997898]}],
  "hum": {"tol": 1e-12},
  "initial_condition": {"potentials": [{"mode": [1, 1], "value": 1.0},
                                       {"mode": [1, 2], "value": -0.5},
                                       {"mode": [2, 2], "value": 0.25}]}
})";

constexpr const char* kHumPipeline = R"({
  "alpha": 0.8, "horizon": 1.0, "dimension": 2,
  "truncation": {"M": 3, "M_gram": 3},
  "region": [[0.0, 1.0, 0.0, 0.5]],
  "sensors": [
    {"kind": "pointwise", "point": [0.6071067811865475, 0.3183098861837907]},
    {"kind": "pointwise", "point": [0.5773502691896257, 0.36787944117144233]},
    {"kind": "pointwise", "point": [0.6283185307179586, 0.5360679774997898]}],
  "initial_condition": {"coefficients": [{"mode": [1, 1], "value": 1.0},
                                         {"mode": [2, 3], "value": 0.5}]}
})";

const std::map<std::string, const char*>& table() {
  static const std::map<std::string, const char*> t{
      {"counterexample", kCounterexample},
      {"counterexample-regional", kCounterexampleRegional},
      {"case1-zone", kCase1Zone},
      {"case2-pointwise", kCase2Pointwise},
      {"case3-filament", kCase3Filament},
      {"strategic-1d-half", kStrategicHalf},
      {"strategic-1d-invpi", kStrategicInvPi},
      {"heat-limit", kHeatLimit},
      {"observable-3sensor", kObservable3},
      {"zero-sensor", kZeroSensor},
      {"hum-synthetic", kHumSynthetic},
      {"hum-pipeline", kHumPipeline},
  };
  return t;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, doc] : table()) names.push_back(name);
  return names;
}

Json preset_document(const std::string& name) {
  const auto it = table().find(name);
  if (it == table().end()) {
    throw ConfigError("--preset", "unknown preset '" + name + "'");
  }
  return Json::parse(it->second);
}

}  // namespace fracgrad
