// Command-line front end: synthesis, analysis and the figure runs.

#include "pronyif/experiment.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace pronyif;

namespace {

struct Options {
  std::string config;
  std::string out;
  std::string estimators;
  std::string sigma;
};

std::vector<Estimator> parse_estimators(const std::string& list) {
  std::vector<Estimator> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(estimator_from_string(item));
  }
  if (out.empty()) throw ConfigError("--estimators is empty");
  return out;
}

ExperimentConfig build_config(const Options& opt, ExperimentConfig base) {
  if (!opt.config.empty()) base = load_config(opt.config, std::move(base));
  if (!opt.estimators.empty()) base.estimators = parse_estimators(opt.estimators);
  if (!opt.sigma.empty()) base.sigma = parse_sigma(opt.sigma);
  if (!opt.out.empty()) base.output = opt.out;
  return base;
}

void print_summary(const ExperimentResult& r, const std::vector<std::filesystem::path>& files) {
  const auto rows = r.error_rows();
  if (!rows.empty()) {
    std::printf("%-10s %-14s %-5s %s\n", "sigma", "estimator", "mode", "rmse_hz");
    for (const auto& row : rows) {
      std::printf("%-10.5g %-14s %-5d %.6g\n", row.sigma, row.estimator.c_str(), row.mode_id, row.rmse);
    }
  }
  for (const auto& run : r.runs) {
    for (const auto& w : run.warnings) std::fprintf(stderr, "warning: %s: %s\n", run.label.c_str(), w.c_str());
  }
  std::printf("wrote %zu files to %s\n", files.size(), r.config.output.c_str());
}

int run_and_write(const ExperimentConfig& cfg) {
  const auto result = run_experiment(cfg);
  const auto files = write_artifacts(result, cfg.output);
  print_summary(result, files);
  return 0;
}

void add_common(CLI::App* sub, Options& opt, bool config_required) {
  auto* c = sub->add_option("--config", opt.config, "JSON experiment config");
  if (config_required) c->required();
  sub->add_option("--out", opt.out, "output directory");
  sub->add_option("--estimators", opt.estimators, "comma list of prony, if-sr, if-fsstr, if-fsstr-og");
  sub->add_option("--sigma", opt.sigma, "window width in s, or min:max:steps");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prony-based instantaneous frequency estimation"};
  app.require_subcommand(1);
  Options opt;

  auto* synth = app.add_subcommand("synth", "write the synthesized signal of a config");
  synth->add_option("--config", opt.config, "JSON experiment config")->required();
  synth->add_option("--out", opt.out, "output directory");
  auto* analyze = app.add_subcommand("analyze", "run the configured estimators");
  add_common(analyze, opt, true);
  auto* compare = app.add_subcommand("compare", "run all estimators against the true IF");
  add_common(compare, opt, true);

  struct Figure {
    const char* name;
    const char* help;
    ExperimentConfig (*defaults)();
  };
  const Figure figures[] = {
      {"fig1a", "three tones, two interfering", figure1a_config},
      {"fig1b", "two parallel linear chirps", figure1b_config},
      {"fig2", "error against sigma for two close tones", figure2_config},
      {"fig3", "two sinusoidal FM modes, Q = 2 and Q = 3", figure3_config},
  };
  std::vector<std::pair<CLI::App*, const Figure*>> figure_cmds;
  for (const auto& f : figures) {
    auto* sub = app.add_subcommand(f.name, f.help);
    add_common(sub, opt, false);
    figure_cmds.emplace_back(sub, &f);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      auto cfg = build_config(opt, {});
      validate(cfg);
      const auto signal = load_signal(cfg);
      const std::filesystem::path dir = cfg.output;
      write_signal_csv(dir / "signal.csv", signal);
      write_text(dir / "config.json", config_to_json(cfg) + "\n");
      std::printf("wrote %lld samples to %s\n", static_cast<long long>(signal.size()),
                  (dir / "signal.csv").string().c_str());
      return 0;
    }
    if (analyze->parsed()) return run_and_write(build_config(opt, {}));
    if (compare->parsed()) {
      ExperimentConfig base;
      base.estimators = all_estimators();
      auto cfg = build_config(opt, base);
      if (cfg.modes.empty()) throw ConfigError("compare needs 'modes' to know the true IF");
      return run_and_write(cfg);
    }
    for (const auto& [sub, fig] : figure_cmds) {
      if (sub->parsed()) return run_and_write(build_config(opt, fig->defaults()));
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  }
  return 0;
}
