#include "fracgrad/experiment.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fracgrad/errors.hpp"

namespace fracgrad {

namespace {

constexpr int kPlotPoints = 101;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const Eigen::VectorXd& v) {
  return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

Json mode_json(const Mode& m) {
  return m.j == 0 ? Json::array({m.i}) : Json::array({m.i, m.j});
}

Json modes_json(const std::vector<Mode>& modes) {
  Json out = Json::array();
  for (const Mode& m : modes) out.push_back(mode_json(m));
  return out;
}

Json coefficients_json(const SpectralField& f) {
  Json out = Json::array();
  const auto& modes = f.basis()->modes();
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const double v = f.coefficients()[Eigen::Index(k)];
    if (v != 0.0) out.push_back({{"mode", mode_json(modes[k])}, {"value", v}});
  }
  return out;
}

void require_weighting(const ExperimentConfig& cfg) {
  if (cfg.weighting == Weighting::none && cfg.alpha <= 0.5) {
    throw ConfigError("hum.weighting",
                      "alpha <= 1/2 needs the compensated weighting");
  }
}

RegionalModel model_for(const ExperimentConfig& cfg) {
  require_weighting(cfg);
  return build_regional_model(cfg.state_basis(), cfg.potential_basis(), cfg.suite(),
                              cfg.order(), cfg.horizon, cfg.omega(), cfg.weighting,
                              cfg.gram_panels);
}

Json gram_payload(const GramReport& rep) {
  Json j = to_json(rep);
  if (rep.matrix.size() > 0) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rep.matrix);
    j["min_eigenvector"] = vector_json(es.eigenvectors().col(0));
  }
  return j;
}

void write_file(const RunContext& ctx, const std::string& name,
                const std::string& text) {
  write_atomic(ctx.out / name, text);
}

}  // namespace

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp =
      path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string observations_csv(const ObservationRecord& rec) {
  rec.validate();
  std::string s = "t";
  for (std::size_t i = 0; i < rec.channel_count(); ++i) {
    s += ",z_" + std::to_string(i + 1);
  }
  s += '\n';
  for (std::size_t k = 0; k < rec.grid.size(); ++k) {
    s += fmt(rec.grid.nodes()[k]);
    for (const auto& ch : rec.channels) s += "," + fmt(ch[k]);
    s += '\n';
  }
  return s;
}

ObservationRecord parse_observations_csv(const std::string& text, double horizon) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("observations", "empty file");
  std::size_t p = 0;
  {
    std::istringstream h(line);
    std::string cell;
    std::getline(h, cell, ',');
    if (cell != "t") throw ConfigError("observations", "header must start with t");
    while (std::getline(h, cell, ',')) {
      if (cell != "z_" + std::to_string(p + 1)) {
        throw ConfigError("observations", "unexpected header column '" + cell + "'");
      }
      ++p;
    }
  }
  if (p == 0) throw ConfigError("observations", "no channels");
  std::vector<double> t;
  std::vector<std::vector<double>> ch(p);
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream r(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(r, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') {
        throw ConfigError("observations", "line " + std::to_string(row) +
                                              ": bad number '" + cell + "'");
      }
      vals.push_back(v);
    }
    if (vals.size() != p + 1) {
      throw ConfigError("observations",
                        "line " + std::to_string(row) + ": wrong column count");
    }
    t.push_back(vals[0]);
    for (std::size_t i = 0; i < p; ++i) ch[i].push_back(vals[i + 1]);
  }
  try {
    return ObservationRecord{TimeGrid::from_nodes(horizon, std::move(t)),
                             std::move(ch), std::nullopt};
  } catch (const DomainError& e) {
    throw ConfigError("observations", e.what());
  }
}

ObservationRecord read_observations(const std::filesystem::path& path,
                                    double horizon) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("observations", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_observations_csv(ss.str(), horizon);
}

std::string scalar_grid_csv(const ScalarFn& f, int dimension) {
  std::string s = dimension == 1 ? "x1,v\n" : "x1,x2,v\n";
  for (int a = 0; a < kPlotPoints; ++a) {
    const double x1 = a / double(kPlotPoints - 1);
    if (dimension == 1) {
      s += fmt(x1) + "," + fmt(f({x1, 0.0})) + "\n";
      continue;
    }
    for (int b = 0; b < kPlotPoints; ++b) {
      const double x2 = b / double(kPlotPoints - 1);
      s += fmt(x1) + "," + fmt(x2) + "," + fmt(f({x1, x2})) + "\n";
    }
  }
  return s;
}

std::string vector_grid_csv(const VectorFn& g, int dimension, const Region* mask) {
  std::string s = dimension == 1 ? "x1,g1\n" : "x1,x2,g1,g2\n";
  auto value = [&](const Point& p) {
    return (mask && !mask->contains(p)) ? Vec2{0.0, 0.0} : g(p);
  };
  for (int a = 0; a < kPlotPoints; ++a) {
    const double x1 = a / double(kPlotPoints - 1);
    if (dimension == 1) {
      s += fmt(x1) + "," + fmt(value({x1, 0.0})[0]) + "\n";
      continue;
    }
    for (int b = 0; b < kPlotPoints; ++b) {
      const double x2 = b / double(kPlotPoints - 1);
      const Vec2 v = value({x1, x2});
      s += fmt(x1) + "," + fmt(x2) + "," + fmt(v[0]) + "," + fmt(v[1]) + "\n";
    }
  }
  return s;
}

std::string mlf_table(double alpha, double beta, const std::vector<double>& zs) {
  std::string s = "z,value\n";
  for (double z : zs) s += fmt(z) + "," + fmt(mlf({alpha, beta}, z)) + "\n";
  return s;
}

Json to_json(const StrategicReport& r) {
  Json j{{"strategic", r.strategic},
         {"truncation", r.truncation},
         {"sensors", r.sensors},
         {"r_max", r.r_max},
         {"ranks", r.ranks},
         {"multiplicities", r.multiplicities},
         {"reason", r.reason}};
  j["offending_group"] = r.offending_group ? Json(*r.offending_group) : Json(nullptr);
  return j;
}

Json to_json(const GramReport& r) {
  return Json{{"potential_modes", modes_json(r.potential_modes)},
              {"matrix", matrix_json(r.matrix)},
              {"eigenvalues", vector_json(r.eigenvalues)},
              {"min_eigenvalue", r.min_eigenvalue},
              {"max_eigenvalue", r.max_eigenvalue},
              {"positive_definite", r.positive_definite},
              {"ill_conditioned", r.ill_conditioned},
              {"tolerance", r.tolerance}};
}

Json to_json(const GMatrixSet& g) {
  Json groups = Json::array();
  const auto& basis = *g.basis;
  for (std::size_t j = 0; j < g.matrices.size(); ++j) {
    const EigenGroup& grp = basis.groups()[j];
    std::vector<Mode> members;
    for (std::size_t m : grp.members) members.push_back(basis.modes()[m]);
    Json entry{{"group", j + 1},
               {"eigenvalue", grp.eigenvalue},
               {"members", modes_json(members)}};
    Json mats = Json::array();
    for (int s = 0; s < basis.dimension(); ++s) {
      mats.push_back(matrix_json(g.matrices[j][std::size_t(s)]));
    }
    entry["G"] = std::move(mats);
    groups.push_back(std::move(entry));
  }
  return groups;
}

Json envelope(const std::string& command, const ExperimentConfig& cfg,
              Json payload, std::optional<double> wall_time) {
  Json j{{"tool", "fracgrad"},
         {"version", FRACGRAD_VERSION},
         {"command", command},
         {"config", cfg.source},
         {"payload", std::move(payload)}};
  if (wall_time) j["wall_time_s"] = *wall_time;
  return j;
}

Json cmd_simulate(const ExperimentConfig& cfg, const RunContext& ctx) {
  const SpectralField y0 = initial_state(cfg);
  const SensorSuite suite = cfg.suite();
  const TimeGrid grid = cfg.time_grid();
  std::optional<NoiseSpec> noise;
  if (cfg.noise.sigma > 0.0) noise = cfg.noise;
  const ObservationRecord rec = simulate(y0, suite, cfg.order(), grid, noise);
  const ObservationRecord at_b =
      simulate(y0, suite, cfg.order(), TimeGrid::from_nodes(cfg.horizon, {cfg.horizon}));
  write_file(ctx, "observations.csv", observations_csv(rec));
  write_file(ctx, "initial_state.csv",
             scalar_grid_csv([&](const Point& p) { return y0.evaluate(p); },
                             cfg.dimension));
  Json sup = Json::array();
  Json at_horizon = Json::array();
  double energy = 0.0;
  for (std::size_t i = 0; i < rec.channel_count(); ++i) {
    double m = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double v = rec.channels[i][k];
      m = std::max(m, std::abs(v));
      energy += grid.weights()[k] *
                time_weight(cfg.order(), cfg.weighting, grid.nodes()[k]) * v * v;
    }
    sup.push_back(m);
    at_horizon.push_back(at_b.channels[i][0]);
  }
  return Json{{"samples", grid.size()},
              {"channels", rec.channel_count()},
              {"sup_norms", sup},
              {"energy", energy},
              {"at_horizon", at_horizon},
              {"initial_coefficients", coefficients_json(y0)},
              {"noise_sigma", cfg.noise.sigma},
              {"noise_seed", cfg.noise.seed},
              {"files", {"observations.csv", "initial_state.csv"}}};
}

Json cmd_strategic(const ExperimentConfig& cfg, const RunContext& ctx) {
  const SensorSuite suite = cfg.suite();
  const BasisPtr basis = cfg.state_basis();
  const GMatrixSet gset = build_g_matrices(basis, suite);
  Json payload{{"g_matrices", to_json(gset)}};
  if (cfg.dimension == 1) {
    int r_max = 0;
    for (const auto& g : basis->groups()) r_max = std::max(r_max, g.multiplicity());
    payload["report"] = to_json(strategic_test_1d(gset, suite.size(), r_max));
    payload["method"] = "rank";
  } else {
    const GramReport gram = gram_regional(model_for(cfg));
    payload["method"] = "gramian";
    payload["report"] = {{"strategic", gram.positive_definite},
                         {"truncation", cfg.gram_truncation},
                         {"sensors", suite.size()},
                         {"reason", gram.positive_definite
                                        ? "Gramian positive definite at truncation " +
                                              std::to_string(cfg.gram_truncation)
                                        : "Gramian has a numerically null direction"}};
    payload["gram"] = gram_payload(gram);
  }
  write_file(ctx, "strategic.json", payload.dump(2) + "\n");
  return payload;
}

Json cmd_gram(const ExperimentConfig& cfg, const RunContext& ctx) {
  const GramReport gram = gram_regional(model_for(cfg));
  Json payload = gram_payload(gram);
  write_file(ctx, "gram.json", payload.dump(2) + "\n");
  return payload;
}

Json cmd_reconstruct(const ExperimentConfig& cfg, const RunContext& ctx) {
  const RegionalModel model = model_for(cfg);
  ObservationRecord rec;
  std::optional<VectorFn> truth;
  std::string truth_kind = "none";
  if (cfg.observations) {
    rec = read_observations(*cfg.observations, cfg.horizon);
  } else {
    const SpectralField y0 = initial_state(cfg);
    std::optional<NoiseSpec> noise;
    if (cfg.noise.sigma > 0.0) noise = cfg.noise;
    rec = simulate(y0.coefficients(), model.kappa, model.responses, model.grid, noise);
    switch (cfg.initial->kind) {
      case InitialCondition::Kind::coefficients:
        truth = [y0](const Point& p) { return y0.gradient(p); };
        truth_kind = "initial_gradient";
        break;
      case InitialCondition::Kind::potentials: {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(Eigen::Index(model.potentials()));
        for (const auto& [m, v] : cfg.initial->values) {
          a[Eigen::Index(model.potential_basis->index_of(m))] += v;
        }
        const SpectralField pot(model.potential_basis, a);
        truth = [pot](const Point& p) { return pot.gradient(p); };
        truth_kind = "potential_field";
        break;
      }
      case InitialCondition::Kind::counterexample:
        truth = counterexample_field();
        truth_kind = "potential_field";
        break;
    }
  }
  HumResult res = solve(rec, model, cfg.hum, truth);
  if (const GramReport gram = gram_regional(model); !gram.positive_definite) {
    res.warnings.push_back("Gramian is not positive definite (min eigenvalue " +
                           fmt(gram.min_eigenvalue) +
                           "): the region is not observable at this truncation");
  }
  const Region omega = cfg.omega();
  const SpectralField pot(model.potential_basis, res.potentials);
  const SpectralField& y = res.initial_state;
  write_file(ctx, "reconstructed_gradient.csv",
             vector_grid_csv([&](const Point& p) { return pot.gradient(p); },
                             cfg.dimension, &omega));
  write_file(ctx, "initial_gradient.csv",
             vector_grid_csv([&](const Point& p) { return y.gradient(p); },
                             cfg.dimension, &omega));
  Json payload{{"potential_modes", modes_json(model.potential_basis->modes())},
               {"potentials", vector_json(res.potentials)},
               {"initial_coefficients", coefficients_json(y)},
               {"iterations", res.iterations},
               {"residual", res.residual},
               {"converged", res.converged},
               {"min_ritz", res.min_ritz},
               {"epsilon", cfg.hum.epsilon},
               {"warnings", res.warnings},
               {"truth", truth_kind},
               {"files", {"reconstructed_gradient.csv", "initial_gradient.csv"}}};
  if (res.error) payload["initial_gradient_error"] = *res.error;
  if (res.potential_error) payload["potential_field_error"] = *res.potential_error;
  if (truth_kind == "initial_gradient") {
    payload["relative_error"] = *res.error;
  } else if (truth_kind == "potential_field") {
    payload["relative_error"] = *res.potential_error;
  }
  return payload;
}

Json cmd_counterexample(const ExperimentConfig& cfg, const RunContext& ctx) {
  if (cfg.dimension != 2 || cfg.truncation < 3) {
    throw ConfigError("truncation.M", "the counterexample needs dimension 2 and M >= 3");
  }
  const double pi = std::numbers::pi;
  const BasisPtr basis = cfg.state_basis();
  const SensorSuite suite = cfg.suite();
  std::vector<double> ts;
  for (int k = 1; k <= 20; ++k) ts.push_back(cfg.horizon * k / 20.0);
  const TimeGrid grid = TimeGrid::from_nodes(cfg.horizon, ts);
  const Region whole = Region::whole(2);
  const Region omega = cfg.region.empty()
                           ? Region(2, {Box{{0.0, 0.0}, {1.0, 1.0 / 6.0}}})
                           : cfg.omega();
  const VectorFn g = counterexample_field();
  const KernelTestResult global = kernel_test(sample(g, aligned_grid(whole, cfg.truncation)),
                                              basis, suite, cfg.order(), whole, grid);
  const KernelTestResult regional = kernel_test(
      sample(g, aligned_grid(omega, cfg.truncation)), basis, suite, cfg.order(), omega, grid);
  const double constant = 5.0 * std::sqrt(3.0) / (8.0 * pi);
  double worst = 0.0;
  Json rows = Json::array();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid.nodes()[k];
    const double exact = constant * mode_response(cfg.order(), -2.0 * pi * pi, t);
    const double got = regional.record.channels[0][k];
    worst = std::max(worst, std::abs(got - exact) / std::abs(exact));
    rows.push_back({t, global.record.channels[0][k], got, exact});
  }
  write_file(ctx, "counterexample.csv", [&] {
    std::string s = "t,z_global,z_regional,z_closed_form\n";
    for (const auto& r : rows) {
      s += fmt(r[0].get<double>()) + "," + fmt(r[1].get<double>()) + "," +
           fmt(r[2].get<double>()) + "," + fmt(r[3].get<double>()) + "\n";
    }
    return s;
  }());
  return Json{{"global", {{"in_kernel", global.in_kernel},
                          {"sup_norm", global.sup_norm},
                          {"scale", global.scale},
                          {"state", coefficients_json(global.state)}}},
              {"regional", {{"in_kernel", regional.in_kernel},
                            {"sup_norm", regional.sup_norm},
                            {"scale", regional.scale},
                            {"coefficient_11", regional.state.coefficient({1, 1})},
                            {"closed_form_constant", constant},
                            {"max_relative_deviation", worst}}},
              {"zero_field", {{"in_kernel", kernel_test(
                                  sample([](const Point&) { return Vec2{0.0, 0.0}; },
                                         aligned_grid(whole, cfg.truncation)),
                                  basis, suite, cfg.order(), whole, grid).in_kernel}}},
              {"files", {"counterexample.csv"}}};
}

}  // namespace fracgrad
