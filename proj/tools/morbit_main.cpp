#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "morbit/experiments.hpp"
#include "morbit/version.hpp"

namespace {

morbit::Json load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw morbit::Error("cannot open config file '" + path + "'");
  morbit::Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw morbit::Error("config '" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morbit: orbital pseudo-metric and transport experiments"};
  app.set_version_flag("--version", std::string(morbit::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  uint64_t seed = 0;
  bool seed_set = false;
  int threads = 1;
  bool force_exact = false, force_float = false;

  CLI::App* run = app.add_subcommand("run", "run one experiment config");
  run->add_option("config", config_path, "JSON config file")->required();
  run->add_option("--out-dir", out_dir, "output directory");
  run->add_option("--seed", seed, "override the config seed")
      ->each([&](const std::string&) { seed_set = true; });
  run->add_option("--threads", threads, "worker threads for per-horizon loops")
      ->check(CLI::PositiveNumber);
  run->add_flag("--exact", force_exact, "force exact rational mode");
  run->add_flag("--float", force_float, "force float mode");

  CLI::App* validate = app.add_subcommand("validate", "parse and check a config");
  validate->add_option("config", config_path, "JSON config file")->required();

  std::string kind;
  CLI::App* describe = app.add_subcommand("describe", "explain a config kind");
  describe->add_option("kind", kind, "experiment kind")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) {
      std::cout << morbit::describe_experiment(kind);
      return 0;
    }
    if (validate->parsed()) {
      morbit::validate_experiment(load_config(config_path));
      std::cout << "ok\n";
      return 0;
    }
    if (force_exact && force_float)
      throw morbit::Error("--exact and --float are mutually exclusive");
    morbit::RunOptions opts;
    opts.out_dir = out_dir;
    if (seed_set) opts.seed_override = seed;
    if (force_exact) opts.mode_override = morbit::NumberMode::kExact;
    if (force_float) opts.mode_override = morbit::NumberMode::kFloat;
    opts.threads = threads;
    std::string message;
    int code = morbit::run_experiment(load_config(config_path), opts, &message);
    std::cout << message << "\n";
    if (code == morbit::kExitCapExhausted)
      std::cerr << "bounded search exhausted its caps; best-effort report written\n";
    return code;
  } catch (const morbit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return morbit::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return morbit::kExitConfigError;
  }
}
