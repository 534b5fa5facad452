#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracgrad/errors.hpp"
#include "fracgrad/experiment.hpp"

namespace {

using fracgrad::Json;

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNonConvergence = 4;

struct Options {
  std::string config;
  std::string preset;
  std::string out;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  bool timing = false;
};

using Command = std::function<Json(const fracgrad::ExperimentConfig&,
                                   const fracgrad::RunContext&)>;

Json load_document(const Options& opt, const std::string& fallback_preset) {
  if (!opt.config.empty() && !opt.preset.empty()) {
    throw fracgrad::ConfigError("--config", "give either --config or --preset, not both");
  }
  Json doc;
  if (!opt.config.empty()) {
    return fracgrad::load_config(opt.config).source;
  }
  if (!opt.preset.empty()) return fracgrad::preset_document(opt.preset);
  if (!fallback_preset.empty()) return fracgrad::preset_document(fallback_preset);
  throw fracgrad::ConfigError("--config", "a config file or --preset is required");
}

std::filesystem::path output_dir(const Options& opt,
                                  const fracgrad::ExperimentConfig& cfg) {
  if (!opt.out.empty()) return opt.out;
  if (cfg.output_dir) return *cfg.output_dir;
  if (const char* env = std::getenv("FRACGRAD_OUT"); env && *env) return env;
  return "fracgrad-out";
}

int run_command(const std::string& name, const Options& opt, const Command& cmd,
                const std::string& fallback_preset) {
  Json doc = load_document(opt, fallback_preset);
  if (opt.seed) doc["noise"]["seed"] = *opt.seed;
  const fracgrad::ExperimentConfig cfg = fracgrad::parse_config(doc);
  if (opt.threads < 1) throw fracgrad::ConfigError("--threads", "must be >= 1");
  const fracgrad::RunContext ctx{output_dir(opt, cfg), opt.timing, opt.threads};

  const auto start = std::chrono::steady_clock::now();
  Json payload = cmd(cfg, ctx);
  std::optional<double> wall;
  if (opt.timing) {
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  const bool converged = !payload.contains("converged") || payload["converged"].get<bool>();
  const Json report = fracgrad::envelope(name, cfg, std::move(payload), wall);
  const std::string text = report.dump(2) + "\n";
  fracgrad::write_atomic(ctx.out / ("report-" + name + ".json"), text);
  std::cout << text;
  if (!converged) {
    std::cerr << "fracgrad: conjugate gradient did not converge\n";
    return kExitNonConvergence;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regional gradient observability for time-fractional diffusion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FRACGRAD_VERSION);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "JSON experiment config");
    sub->add_option("--preset", opt.preset, "embedded preset name");
    sub->add_option("--out", opt.out, "output directory");
    sub->add_option("--seed", opt.seed, "noise seed override");
    sub->add_option("--threads", opt.threads, "worker threads");
    sub->add_flag("--timing", opt.timing, "record wall time in the report");
  };

  double alpha = 1.0;
  double beta = 1.0;
  std::vector<double> zs;
  CLI::App* mlf = app.add_subcommand("mlf", "tabulate E_{alpha,beta}(z) as CSV");
  mlf->add_option("--alpha", alpha)->required();
  mlf->add_option("--beta", beta)->required();
  mlf->add_option("--z", zs, "evaluation points")->required()->allow_extra_args();

  app.add_subcommand("presets", "list embedded presets");

  const std::map<std::string, std::pair<Command, std::string>> commands{
      {"simulate", {fracgrad::cmd_simulate, ""}},
      {"strategic", {fracgrad::cmd_strategic, ""}},
      {"gram", {fracgrad::cmd_gram, ""}},
      {"reconstruct", {fracgrad::cmd_reconstruct, ""}},
      {"counterexample", {fracgrad::cmd_counterexample, "counterexample"}},
  };
  const std::map<std::string, std::string> help{
      {"simulate", "simulate sensor outputs"},
      {"strategic", "rank test and G matrices"},
      {"gram", "regional gradient Gramian"},
      {"reconstruct", "HUM reconstruction of the regional gradient"},
      {"counterexample", "zero global output vs nonzero regional output"},
  };
  for (const auto& [name, entry] : commands) add_common(app.add_subcommand(name, help.at(name)));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (mlf->parsed()) {
      std::cout << fracgrad::mlf_table(alpha, beta, zs);
      return 0;
    }
    if (app.got_subcommand("presets")) {
      for (const auto& n : fracgrad::preset_names()) std::cout << n << "\n";
      return 0;
    }
    for (const auto& [name, entry] : commands) {
      if (app.got_subcommand(name)) return run_command(name, opt, entry.first, entry.second);
    }
  } catch (const fracgrad::ConfigError& e) {
    std::cerr << "fracgrad: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Json::exception& e) {
    std::cerr << "fracgrad: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const fracgrad::NonConvergenceError& e) {
    std::cerr << "fracgrad: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const fracgrad::DomainError& e) {
    std::cerr << "fracgrad: domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const fracgrad::AccuracyError& e) {
    std::cerr << "fracgrad: accuracy error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const fracgrad::SpdViolationError& e) {
    std::cerr << "fracgrad: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "fracgrad: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
