#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fracgrad/errors.hpp"
#include "fracgrad/experiment.hpp"

namespace fracgrad {

namespace {

const Json& member(const Json& obj, const char* key) {
  static const Json null_json;
  if (!obj.is_object()) return null_json;
  const auto it = obj.find(key);
  return it == obj.end() ? null_json : *it;
}

double number(const Json& obj, const char* key, double fallback,
              const std::string& field) {
  const Json& v = member(obj, key);
  if (v.is_null()) return fallback;
  if (!v.is_number()) throw ConfigError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

int integer(const Json& obj, const char* key, int fallback,
            const std::string& field) {
  const Json& v = member(obj, key);
  if (v.is_null()) return fallback;
  if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
  return v.get<int>();
}

std::vector<double> numbers(const Json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError(field, "expected an array of numbers");
  std::vector<double> out;
  for (const Json& x : v) {
    if (!x.is_number()) throw ConfigError(field, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Box parse_box(const Json& v, int dimension, const std::string& field) {
  const std::vector<double> c = numbers(v, field);
  if (c.size() != std::size_t(2 * dimension)) {
    throw ConfigError(field, dimension == 1 ? "expected [a1, b1]"
                                            : "expected [a1, b1, a2, b2]");
  }
  Box b;
  b.lo = {c[0], dimension == 2 ? c[2] : 0.0};
  b.hi = {c[1], dimension == 2 ? c[3] : 1.0};
  return b;
}

Point parse_point(const Json& v, int dimension, const std::string& field) {
  const std::vector<double> c = numbers(v, field);
  if (c.size() != std::size_t(dimension)) {
    throw ConfigError(field, "expected " + std::to_string(dimension) +
                                 " coordinates");
  }
  return {c[0], dimension == 2 ? c[1] : 0.0};
}

Mode parse_mode(const Json& v, int dimension, const std::string& field) {
  if (!v.is_array() || v.size() != std::size_t(dimension)) {
    throw ConfigError(field, "expected a mode index list of length " +
                                 std::to_string(dimension));
  }
  for (const Json& x : v) {
    if (!x.is_number_integer() || x.get<int>() < 1) {
      throw ConfigError(field, "mode indices must be integers >= 1");
    }
  }
  return {v[0].get<int>(), dimension == 2 ? v[1].get<int>() : 0};
}

std::vector<std::pair<Mode, double>> parse_mode_values(const Json& v, int dimension,
                                                       int truncation,
                                                       const std::string& field) {
  if (!v.is_array()) throw ConfigError(field, "expected a list of {mode, value}");
  std::vector<std::pair<Mode, double>> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string f = field + "[" + std::to_string(k) + "]";
    const Mode m = parse_mode(member(v[k], "mode"), dimension, f + ".mode");
    if (m.max_index() > truncation) {
      throw ConfigError(f + ".mode", "index exceeds the truncation " +
                                         std::to_string(truncation));
    }
    if (!member(v[k], "value").is_number()) {
      throw ConfigError(f + ".value", "expected a number");
    }
    out.emplace_back(m, number(v[k], "value", 0.0, f + ".value"));
  }
  return out;
}

template <typename F>
auto domain_as_config(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ConfigError(field, e.what());
  }
}

}  // namespace

Distribution parse_distribution(const Json& j, int dimension,
                                const std::string& field) {
  if (j.is_null()) return Distribution::constant(1.0);
  if (!j.is_object()) throw ConfigError(field, "expected an object");
  const Json& type = member(j, "type");
  if (!type.is_string()) throw ConfigError(field + ".type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "constant") {
    return Distribution::constant(number(j, "value", 1.0, field + ".value"));
  }
  if (t == "sine_product") {
    return Distribution::sine_product(number(j, "k1", 1.0, field + ".k1"),
                                      number(j, "k2", 1.0, field + ".k2"),
                                      number(j, "amplitude", 1.0, field + ".amplitude"),
                                      dimension);
  }
  if (t == "mode") {
    return Distribution::mode_shape(
        parse_mode(member(j, "mode"), dimension, field + ".mode"));
  }
  if (t == "table") {
    std::vector<double> x1 = numbers(member(j, "x1"), field + ".x1");
    std::vector<double> x2;
    std::vector<std::vector<double>> values;
    const Json& vals = member(j, "values");
    if (dimension == 1) {
      for (double v : numbers(vals, field + ".values")) values.push_back({v});
    } else {
      x2 = numbers(member(j, "x2"), field + ".x2");
      if (!vals.is_array()) throw ConfigError(field + ".values", "expected rows");
      for (const Json& row : vals) values.push_back(numbers(row, field + ".values"));
    }
    return domain_as_config(field, [&] {
      return Distribution::tabulated(std::move(x1), std::move(x2), std::move(values));
    });
  }
  throw ConfigError(field + ".type", "unknown distribution '" + t + "'");
}

Sensor parse_sensor(const Json& j, int dimension, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object");
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) throw ConfigError(field + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  return domain_as_config(field, [&] {
    if (k == "zone") {
      return Sensor::zone(parse_box(member(j, "box"), dimension, field + ".box"),
                          parse_distribution(member(j, "distribution"), dimension,
                                             field + ".distribution"),
                          dimension);
    }
    if (k == "pointwise") {
      return Sensor::pointwise(
          parse_point(member(j, "point"), dimension, field + ".point"), dimension);
    }
    if (k == "filament") {
      if (dimension != 2) {
        throw ConfigError(field + ".kind", "filament sensors need dimension 2");
      }
      const Json& fixed = member(j, "fixed");
      if (!fixed.is_string() ||
          (fixed.get<std::string>() != "x1" && fixed.get<std::string>() != "x2")) {
        throw ConfigError(field + ".fixed", "expected \"x1\" or \"x2\"");
      }
      const std::vector<double> range =
          numbers(member(j, "range"), field + ".range");
      if (range.size() != 2) throw ConfigError(field + ".range", "expected [t1, t2]");
      Segment seg{fixed.get<std::string>() == "x1" ? 0 : 1,
                  number(j, "at", 0.5, field + ".at"), range[0], range[1]};
      return Sensor::filament(seg, parse_distribution(member(j, "distribution"), 2,
                                                      field + ".distribution"));
    }
    throw ConfigError(field + ".kind", "unknown sensor kind '" + k + "'");
  });
}

ExperimentConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "expected a JSON object");
  ExperimentConfig c;
  c.alpha = number(doc, "alpha", c.alpha, "alpha");
  if (!(c.alpha > 0.0 && c.alpha <= 1.0)) {
    throw ConfigError("alpha", "must lie in (0, 1]");
  }
  c.horizon = number(doc, "horizon", c.horizon, "horizon");
  if (!(c.horizon > 0.0)) throw ConfigError("horizon", "must be positive");
  c.dimension = integer(doc, "dimension", c.dimension, "dimension");
  if (c.dimension != 1 && c.dimension != 2) {
    throw ConfigError("dimension", "must be 1 or 2");
  }
  const Json& trunc = member(doc, "truncation");
  c.truncation = integer(trunc, "M", c.truncation, "truncation.M");
  c.gram_truncation = integer(trunc, "M_gram", c.gram_truncation, "truncation.M_gram");
  if (c.truncation < 1) throw ConfigError("truncation.M", "must be >= 1");
  if (c.gram_truncation < 1 || c.gram_truncation > c.truncation) {
    throw ConfigError("truncation.M_gram", "must lie in [1, M]");
  }
  const Json& region = member(doc, "region");
  if (!region.is_null()) {
    if (!region.is_array() || region.empty()) {
      throw ConfigError("region", "expected a non-empty list of boxes");
    }
    for (std::size_t k = 0; k < region.size(); ++k) {
      c.region.push_back(
          parse_box(region[k], c.dimension, "region[" + std::to_string(k) + "]"));
    }
    domain_as_config("region", [&] { return Region(c.dimension, c.region); });
  }
  const Json& sensors = member(doc, "sensors");
  if (!sensors.is_array() || sensors.empty()) {
    throw ConfigError("sensors", "expected a non-empty list");
  }
  for (std::size_t k = 0; k < sensors.size(); ++k) {
    parse_sensor(sensors[k], c.dimension, "sensors[" + std::to_string(k) + "]");
  }
  c.sensors = sensors;
  const Json& tg = member(doc, "time_grid");
  c.panels = integer(tg, "panels", c.panels, "time_grid.panels");
  c.grading = integer(tg, "grading", c.grading, "time_grid.grading");
  if (c.panels < 1) throw ConfigError("time_grid.panels", "must be >= 1");
  if (c.grading < 0 || c.grading > 32) {
    throw ConfigError("time_grid.grading", "must lie in [0, 32] (0 = automatic)");
  }
  const Json& ts = member(tg, "two_sided");
  if (!ts.is_null()) {
    if (!ts.is_boolean()) throw ConfigError("time_grid.two_sided", "expected a boolean");
    c.two_sided = ts.get<bool>();
  }
  const Json& noise = member(doc, "noise");
  c.noise.sigma = number(noise, "sigma", 0.0, "noise.sigma");
  if (!(c.noise.sigma >= 0.0)) throw ConfigError("noise.sigma", "must be >= 0");
  const Json& seed = member(noise, "seed");
  if (!seed.is_null()) {
    if (!seed.is_number_unsigned()) {
      throw ConfigError("noise.seed", "expected a non-negative integer");
    }
    c.noise.seed = seed.get<std::uint64_t>();
  }
  const Json& hum = member(doc, "hum");
  c.hum.tolerance = number(hum, "tol", c.hum.tolerance, "hum.tol");
  c.hum.max_iterations = integer(hum, "max_iter", c.hum.max_iterations, "hum.max_iter");
  c.hum.epsilon = number(hum, "epsilon", c.hum.epsilon, "hum.epsilon");
  c.gram_panels = integer(hum, "panels", c.gram_panels, "hum.panels");
  if (!(c.hum.tolerance > 0.0)) throw ConfigError("hum.tol", "must be positive");
  if (c.hum.max_iterations < 1) throw ConfigError("hum.max_iter", "must be >= 1");
  if (!(c.hum.epsilon >= 0.0)) throw ConfigError("hum.epsilon", "must be >= 0");
  if (c.gram_panels < 1) throw ConfigError("hum.panels", "must be >= 1");
  const Json& w = member(hum, "weighting");
  if (!w.is_null()) {
    if (w == "none") {
      c.weighting = Weighting::none;
    } else if (w == "compensated") {
      c.weighting = Weighting::compensated;
    } else {
      throw ConfigError("hum.weighting", "expected \"none\" or \"compensated\"");
    }
  }
  const Json& ic = member(doc, "initial_condition");
  if (!ic.is_null()) {
    InitialCondition init;
    if (!member(ic, "coefficients").is_null()) {
      init.values = parse_mode_values(member(ic, "coefficients"), c.dimension,
                                      c.truncation, "initial_condition.coefficients");
    } else if (!member(ic, "potentials").is_null()) {
      init.kind = InitialCondition::Kind::potentials;
      init.values = parse_mode_values(member(ic, "potentials"), c.dimension,
                                      c.gram_truncation, "initial_condition.potentials");
    } else if (member(ic, "preset") == "counterexample") {
      if (c.dimension != 2 || c.truncation < 3) {
        throw ConfigError("initial_condition.preset",
                          "the counterexample needs dimension 2 and M >= 3");
      }
      init.kind = InitialCondition::Kind::counterexample;
    } else {
      throw ConfigError("initial_condition",
                        "expected coefficients, potentials or preset \"counterexample\"");
    }
    c.initial = std::move(init);
  }
  const Json& obs = member(doc, "observations");
  if (!obs.is_null()) {
    if (!obs.is_string()) throw ConfigError("observations", "expected a path");
    c.observations = obs.get<std::string>();
  }
  const Json& out = member(doc, "output_dir");
  if (!out.is_null()) {
    if (!out.is_string()) throw ConfigError("output_dir", "expected a path");
    c.output_dir = out.get<std::string>();
  }
  c.source = doc;
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

Region ExperimentConfig::omega() const {
  return region.empty() ? Region::whole(dimension) : Region(dimension, region);
}

SensorSuite ExperimentConfig::suite() const {
  std::vector<Sensor> s;
  for (std::size_t k = 0; k < sensors.size(); ++k) {
    s.push_back(parse_sensor(sensors[k], dimension, "sensors[" + std::to_string(k) + "]"));
  }
  return SensorSuite(std::move(s));
}

TimeGrid ExperimentConfig::time_grid() const {
  return two_sided ? TimeGrid::two_sided(order(), horizon, panels, grading)
                   : TimeGrid::graded(order(), horizon, panels, grading);
}

BasisPtr ExperimentConfig::state_basis() const {
  return build_basis(dimension, truncation);
}

BasisPtr ExperimentConfig::potential_basis() const {
  return build_basis(dimension, gram_truncation);
}

VectorFn counterexample_field() {
  const Mode m{1, 3};
  const double s = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
  return [m, s](const Point& p) {
    const Vec2 g = m.gradient(p);
    return Vec2{s * g[0], s * g[1]};
  };
}

SpectralField initial_state(const ExperimentConfig& cfg) {
  const BasisPtr basis = cfg.state_basis();
  if (!cfg.initial) throw ConfigError("initial_condition", "required by this command");
  const InitialCondition& ic = *cfg.initial;
  switch (ic.kind) {
    case InitialCondition::Kind::coefficients: {
      Eigen::VectorXd c = Eigen::VectorXd::Zero(Eigen::Index(basis->size()));
      for (const auto& [m, v] : ic.values) c[Eigen::Index(basis->index_of(m))] += v;
      return SpectralField(basis, std::move(c));
    }
    case InitialCondition::Kind::potentials: {
      const BasisPtr pot = cfg.potential_basis();
      Eigen::VectorXd a = Eigen::VectorXd::Zero(Eigen::Index(pot->size()));
      for (const auto& [m, v] : ic.values) a[Eigen::Index(pot->index_of(m))] += v;
      const Eigen::MatrixXd d = gradient_coupling(*pot, *basis, cfg.omega());
      return SpectralField(basis, d.transpose() * a);
    }
    case InitialCondition::Kind::counterexample: {
      const Region omega = cfg.omega();
      const VectorFieldSamples g =
          sample(counterexample_field(), aligned_grid(omega, cfg.truncation));
      return grad_adjoint(restrict_to(g, omega), basis);
    }
  }
  throw ConfigError("initial_condition", "unsupported kind");
}

}  // namespace fracgrad
