#include "pronyif/experiment.hpp"

#include "pronyif/fsst.hpp"
#include "pronyif/plot.hpp"

#include "json.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

#ifndef PRONYIF_VERSION
#define PRONYIF_VERSION "unknown"
#endif

namespace pronyif {

using nlohmann::json;

std::string to_string(Estimator e) {
  switch (e) {
    case Estimator::Prony: return "prony";
    case Estimator::IfSr: return "if-sr";
    case Estimator::IfFsstr: return "if-fsstr";
    case Estimator::IfFsstrOg: return "if-fsstr-og";
  }
  return "unknown";
}

Estimator estimator_from_string(const std::string& name) {
  for (auto e : all_estimators()) {
    if (to_string(e) == name) return e;
  }
  throw ConfigError("unknown estimator '" + name + "' (prony, if-sr, if-fsstr, if-fsstr-og)");
}

std::vector<Estimator> all_estimators() {
  return {Estimator::Prony, Estimator::IfSr, Estimator::IfFsstr, Estimator::IfFsstrOg};
}

std::vector<double> SigmaSweep::values() const {
  if (steps == 1) return {min};
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = min + (max - min) * i / (steps - 1);
  return out;
}

SigmaSweep parse_sigma(const std::string& text) {
  SigmaSweep s;
  try {
    const auto a = text.find(':');
    if (a == std::string::npos) {
      s.min = s.max = std::stod(text);
      s.steps = 1;
      return s;
    }
    const auto b = text.find(':', a + 1);
    if (b == std::string::npos) throw ConfigError("");
    s.min = std::stod(text.substr(0, a));
    s.max = std::stod(text.substr(a + 1, b - a - 1));
    s.steps = std::stoi(text.substr(b + 1));
  } catch (const std::exception&) {
    throw ConfigError("bad sigma '" + text + "': expected <value> or <min>:<max>:<steps>");
  }
  return s;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.modes.empty() && cfg.signal_file.empty()) throw ConfigError("config needs 'modes' or 'signal_file'");
  if (!cfg.modes.empty() && !cfg.signal_file.empty()) {
    throw ConfigError("'modes' and 'signal_file' are mutually exclusive");
  }
  if (cfg.mode_count < 0) throw ConfigError("mode_count must be positive");
  if (!cfg.signal_file.empty() && cfg.mode_count < 1) throw ConfigError("a signal_file run needs mode_count >= 1");
  if (!(cfg.sampling_rate > 0.0) || !std::isfinite(cfg.sampling_rate)) {
    throw ConfigError("sampling_rate must be positive");
  }
  if (cfg.samples < 2) throw ConfigError("samples must be at least 2");
  if (cfg.bins < 2) throw ConfigError("bins must be at least 2");
  if (cfg.sigma.steps < 1) throw ConfigError("sigma steps must be at least 1");
  if (!(cfg.sigma.min > 0.0) || !(cfg.sigma.max > 0.0)) throw ConfigError("sigma bounds must be positive");
  if (cfg.sigma.steps > 1 && !(cfg.sigma.max > cfg.sigma.min)) throw ConfigError("sigma sweep needs min < max");
  if (cfg.sigma.steps == 1 && cfg.sigma.max != cfg.sigma.min) throw ConfigError("single sigma needs min == max");
  if (cfg.estimators.empty()) throw ConfigError("estimator set is empty");
  if (std::set<Estimator>(cfg.estimators.begin(), cfg.estimators.end()).size() != cfg.estimators.size()) {
    throw ConfigError("estimator listed twice");
  }
  for (int q : cfg.prony_components) {
    if (q < 1) throw ConfigError("prony components must be positive");
  }
  if (cfg.max_jump < 0) throw ConfigError("ridge max_jump must be non-negative");
  if (!(cfg.gamma_ratio >= 0.0) || !(cfg.gamma_ratio < 1.0)) throw ConfigError("fsst gamma_ratio must be in [0, 1)");
  for (const auto& m : cfg.modes) {
    try {
      validate(m, static_cast<double>(cfg.samples - 1) / cfg.sampling_rate);
    } catch (const InvalidModeSpec& e) {
      throw ConfigError(e.what());
    }
  }
}

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void take(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

ModeSpec mode_from_json(const json& j) {
  check_keys(j, {"kind", "amplitude", "frequency", "rate", "depth"}, "mode");
  ModeSpec m;
  m.kind = mode_kind_from_string(j.at("kind").get<std::string>());
  take(j, "amplitude", m.amplitude);
  take(j, "frequency", m.frequency);
  take(j, "rate", m.rate);
  take(j, "depth", m.depth);
  return m;
}

json mode_to_json(const ModeSpec& m) {
  json j{{"kind", to_string(m.kind)}, {"amplitude", m.amplitude}, {"frequency", m.frequency}};
  if (m.kind != ModeKind::PureTone) j["rate"] = m.rate;
  if (m.kind == ModeKind::SinusoidalFM) j["depth"] = m.depth;
  return j;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text, ExperimentConfig cfg) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    check_keys(j,
               {"name", "modes", "signal_file", "mode_count", "sampling_rate", "samples", "bins", "sigma",
                "estimators", "prony", "ridge", "fsst", "output"},
               "config");
    take(j, "name", cfg.name);
    if (j.contains("modes")) {
      cfg.modes.clear();
      for (const auto& m : j.at("modes")) cfg.modes.push_back(mode_from_json(m));
      if (!cfg.modes.empty()) cfg.signal_file.clear();
    }
    if (j.contains("signal_file")) {
      cfg.signal_file = j.at("signal_file").get<std::string>();
      if (!cfg.signal_file.empty()) cfg.modes.clear();
    }
    take(j, "mode_count", cfg.mode_count);
    take(j, "sampling_rate", cfg.sampling_rate);
    if (j.contains("samples")) cfg.samples = j.at("samples").get<long long>();
    if (j.contains("bins")) cfg.bins = j.at("bins").get<long long>();
    if (j.contains("sigma")) {
      const auto& s = j.at("sigma");
      if (s.is_number()) {
        cfg.sigma = {s.get<double>(), s.get<double>(), 1};
      } else {
        check_keys(s, {"min", "max", "steps"}, "sigma");
        cfg.sigma = {s.at("min").get<double>(), s.at("max").get<double>(), s.at("steps").get<int>()};
      }
    }
    if (j.contains("estimators")) {
      cfg.estimators.clear();
      for (const auto& e : j.at("estimators")) cfg.estimators.push_back(estimator_from_string(e.get<std::string>()));
    }
    if (j.contains("prony")) {
      const auto& p = j.at("prony");
      check_keys(p,
                 {"components", "truncation", "amplitude_ratio", "jump_hz", "merge_hz", "jump_half_window", "min_negative_run",
                  "min_support", "rank_tolerance", "condition_limit", "radius_tolerance"},
                 "prony");
      if (p.contains("components")) {
        const auto& c = p.at("components");
        cfg.prony_components.clear();
        if (c.is_array()) {
          for (const auto& q : c) cfg.prony_components.push_back(q.get<int>());
          cfg.prony.components = 0;
        } else {
          cfg.prony.components = c.get<int>();
        }
      }
      take(p, "truncation", cfg.prony.truncation);
      take(p, "amplitude_ratio", cfg.prony.amplitude_ratio);
      take(p, "jump_hz", cfg.prony.jump_hz);
      take(p, "merge_hz", cfg.prony.merge_hz);
      take(p, "jump_half_window", cfg.prony.jump_half_window);
      take(p, "min_negative_run", cfg.prony.min_negative_run);
      take(p, "min_support", cfg.prony.min_support);
      take(p, "rank_tolerance", cfg.prony.rank_tolerance);
      take(p, "condition_limit", cfg.prony.condition_limit);
      take(p, "radius_tolerance", cfg.prony.radius_tolerance);
    }
    if (j.contains("ridge")) {
      check_keys(j.at("ridge"), {"max_jump"}, "ridge");
      if (j.at("ridge").contains("max_jump")) cfg.max_jump = j.at("ridge").at("max_jump").get<long long>();
    }
    if (j.contains("fsst")) {
      check_keys(j.at("fsst"), {"gamma_ratio"}, "fsst");
      take(j.at("fsst"), "gamma_ratio", cfg.gamma_ratio);
    }
    take(j, "output", cfg.output);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const InvalidModeSpec& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
  std::string text;
  try {
    text = read_text(path);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  return parse_config(text, std::move(base));
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["name"] = cfg.name;
  if (!cfg.signal_file.empty()) {
    j["signal_file"] = cfg.signal_file;
  } else {
    j["modes"] = json::array();
    for (const auto& m : cfg.modes) j["modes"].push_back(mode_to_json(m));
  }
  j["mode_count"] = cfg.mode_count;
  j["sampling_rate"] = cfg.sampling_rate;
  j["samples"] = cfg.samples;
  j["bins"] = cfg.bins;
  if (cfg.sigma.steps == 1) {
    j["sigma"] = cfg.sigma.min;
  } else {
    j["sigma"] = {{"min", cfg.sigma.min}, {"max", cfg.sigma.max}, {"steps", cfg.sigma.steps}};
  }
  j["estimators"] = json::array();
  for (auto e : cfg.estimators) j["estimators"].push_back(to_string(e));
  const auto& p = cfg.prony;
  j["prony"] = {{"truncation", p.truncation},
                {"amplitude_ratio", p.amplitude_ratio},
                {"jump_hz", p.jump_hz},
                {"merge_hz", p.merge_hz},
                {"jump_half_window", p.jump_half_window},
                {"min_negative_run", p.min_negative_run},
                {"min_support", p.min_support},
                {"rank_tolerance", p.rank_tolerance},
                {"condition_limit", p.condition_limit},
                {"radius_tolerance", p.radius_tolerance}};
  if (cfg.prony_components.empty()) {
    j["prony"]["components"] = p.components;
  } else {
    j["prony"]["components"] = cfg.prony_components;
  }
  j["ridge"] = {{"max_jump", cfg.max_jump}};
  j["fsst"] = {{"gamma_ratio", cfg.gamma_ratio}};
  j["output"] = cfg.output;
  return j.dump(2);
}

ExperimentConfig figure1a_config() {
  ExperimentConfig c;
  c.name = "figure1a";
  c.modes = {ModeSpec::tone(1.0, 200.3), ModeSpec::tone(2.0, 212.7), ModeSpec::tone(3.0, 330.9)};
  c.output = "out/figure1a";
  c.reconstruction = true;
  return c;
}

ExperimentConfig figure1b_config() {
  ExperimentConfig c;
  c.name = "figure1b";
  c.modes = {ModeSpec::chirp(1.0, 150.3, 100.0), ModeSpec::chirp(1.0, 165.5, 100.0)};
  c.output = "out/figure1b";
  c.reconstruction = true;
  return c;
}

ExperimentConfig figure2_config() {
  ExperimentConfig c;
  c.name = "figure2";
  const double gap = 1.0 / (std::sqrt(std::numbers::pi / 2.0) * 0.04);
  c.modes = {ModeSpec::tone(1.0, 200.3), ModeSpec::tone(1.0, 200.3 + gap)};
  c.sigma = {0.01, 0.08, 15};
  c.estimators = all_estimators();
  c.output = "out/figure2";
  c.reconstruction = true;
  return c;
}

ExperimentConfig figure3_config() {
  ExperimentConfig c;
  c.name = "figure3";
  c.modes = {ModeSpec::sinusoidal_fm(1.0, 180.0, 30.0, 1.0), ModeSpec::sinusoidal_fm(1.0, 250.0, -30.0, 1.0)};
  c.prony_components = {2, 3};
  c.output = "out/figure3";
  c.reconstruction = true;
  return c;
}

std::vector<ErrorRow> ExperimentResult::error_rows() const {
  std::vector<ErrorRow> rows;
  for (const auto& run : runs) {
    for (const auto& e : run.errors) rows.push_back({run.sigma, run.label, e.mode_id, e.rmse});
  }
  return rows;
}

const EstimatorRun* ExperimentResult::find(const std::string& label, double sigma) const {
  for (const auto& run : runs) {
    if (run.label == label && std::abs(run.sigma - sigma) <= 1e-12 * std::max(1.0, sigma)) return &run;
  }
  return nullptr;
}

Signal load_signal(const ExperimentConfig& cfg) {
  if (cfg.signal_file.empty()) {
    try {
      return synthesize(cfg.modes, cfg.sampling_rate, cfg.samples);
    } catch (const InvalidModeSpec& e) {
      throw ConfigError(e.what());
    }
  }
  try {
    auto s = read_signal_csv(cfg.signal_file);
    validate(s);
    return s;
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(cfg.signal_file + ": " + e.what());
  }
}

namespace {

void sort_by_mean_frequency(std::vector<IfEstimate>& estimates) {
  std::stable_sort(estimates.begin(), estimates.end(),
                   [](const IfEstimate& a, const IfEstimate& b) { return a.frequency.mean() < b.frequency.mean(); });
  for (std::size_t i = 0; i < estimates.size(); ++i) estimates[i].mode_id = static_cast<int>(i);
}

std::vector<IfEstimate> ridge_estimates(Estimator estimator, const ComplexTF& v, const ComplexTF* vd, int count,
                                        Eigen::Index max_jump, double gamma_ratio, RidgeSet* ridges_out) {
  RidgeSet ridges;
  LifField field;
  if (estimator == Estimator::IfSr) {
    ridges = extract_ridges(spectrogram(v), count, max_jump);
  } else {
    field = lif(v, *vd, relative_threshold(v, gamma_ratio));
    ridges = extract_ridges(fsst(v, field), count, max_jump);
  }
  std::vector<IfEstimate> out;
  for (std::size_t r = 0; r < ridges.ridges.size(); ++r) {
    const int id = static_cast<int>(r);
    out.push_back(estimator == Estimator::IfFsstrOg ? off_grid_refine(ridges.ridges[r], field, id)
                                                    : ridge_estimate(ridges.ridges[r], id));
  }
  sort_by_mean_frequency(out);
  if (ridges_out) *ridges_out = std::move(ridges);
  return out;
}

void score(EstimatorRun& run, const std::vector<Eigen::VectorXd>& truths, SampleRange range) {
  if (truths.empty()) return;
  run.match = match_estimates(run.estimates, truths, range);
  for (std::size_t p = 0; p < truths.size(); ++p) {
    if (run.match[p] < 0) continue;
    auto e = estimation_error(run.estimates[static_cast<std::size_t>(run.match[p])].frequency, truths[p], range);
    e.mode_id = static_cast<int>(p);
    run.errors.push_back(std::move(e));
  }
}

}  // namespace

std::vector<IfEstimate> run_ridge_estimator(Estimator estimator, const Signal& signal, const StftParams& params,
                                            int count, Eigen::Index max_jump, double gamma_ratio,
                                            RidgeSet* ridges) {
  if (estimator == Estimator::Prony) throw std::invalid_argument("run_ridge_estimator: prony is not ridge-based");
  const auto v = stft(signal, params);
  if (estimator == Estimator::IfSr) return ridge_estimates(estimator, v, nullptr, count, max_jump, gamma_ratio, ridges);
  const auto vd = stft_derivative_window(signal, params);
  return ridge_estimates(estimator, v, &vd, count, max_jump, gamma_ratio, ridges);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  ExperimentResult result;
  result.config = config;
  result.signal = load_signal(config);
  auto& cfg = result.config;
  cfg.sampling_rate = result.signal.sampling_rate;
  cfg.samples = result.signal.size();
  if (cfg.mode_count == 0) cfg.mode_count = static_cast<int>(cfg.modes.size());
  for (const auto& m : cfg.modes) result.truths.push_back(true_if_series(m, cfg.sampling_rate, cfg.samples));

  const std::vector<int> q_list = cfg.prony_components.empty() ? std::vector<int>{cfg.prony.components}
                                                                 : cfg.prony_components;
  for (double sigma : cfg.sigma.values()) {
    StftParams params;
    try {
      params = make_stft_params(sigma, cfg.bins, cfg.sampling_rate);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const auto v = stft(result.signal, params);
    result.spectrograms.push_back(spectrogram(v));
    const auto& s = result.spectrograms.back();
    std::optional<ComplexTF> vd;
    SampleRange range{0, cfg.samples};
    if (!result.truths.empty()) {
      try {
        range = interior_range(cfg.samples, sigma, cfg.sampling_rate);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }

    for (auto estimator : cfg.estimators) {
      if (estimator == Estimator::Prony) {
        for (int q : q_list) {
          EstimatorRun run;
          run.sigma = sigma;
          run.estimator = estimator;
          PronyConfig pc = cfg.prony;
          pc.modes = cfg.mode_count;
          pc.components = q;
          try {
            validate(resolve(pc, params), params);
          } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
          }
          auto res = prony_if(s, pc);
          run.components = resolve(pc, params).components;
          run.label = q_list.size() > 1 ? "prony-q" + std::to_string(run.components) : "prony";
          run.estimates = std::move(res.modes);
          run.warnings = std::move(res.warnings);
          score(run, result.truths, range);
          result.runs.push_back(std::move(run));
        }
        continue;
      }
      if (estimator != Estimator::IfSr && !vd) vd = stft_derivative_window(result.signal, params);
      EstimatorRun run;
      run.sigma = sigma;
      run.estimator = estimator;
      run.label = to_string(estimator);
      run.estimates = ridge_estimates(estimator, v, vd ? &*vd : nullptr, cfg.mode_count, cfg.max_jump,
                                      cfg.gamma_ratio, &run.ridges);
      if (run.ridges.incomplete) run.warnings.push_back("fewer ridges than modes could be seeded");
      score(run, result.truths, range);
      result.runs.push_back(std::move(run));
    }
  }
  return result;
}

std::vector<std::filesystem::path> write_artifacts(const ExperimentResult& result, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  const auto& cfg = result.config;
  std::vector<fs::path> files;
  const auto emit = [&](const fs::path& name) {
    files.push_back(dir / name);
    return dir / name;
  };

  write_signal_csv(emit("signal.csv"), result.signal);

  const bool single = result.spectrograms.size() == 1;
  if (single) {
    const auto tf_csv = emit("spectrogram.csv");
    write_tf_csv(tf_csv, result.spectrograms.front());
    std::vector<fs::path> estimate_csvs;
    for (const auto& run : result.runs) {
      const auto est = emit("estimates_" + run.label + ".csv");
      write_estimates_csv(est, run.estimates, cfg.sampling_rate);
      estimate_csvs.push_back(est);
      if (run.estimator != Estimator::Prony) write_ridges_csv(emit("ridges_" + run.label + ".csv"), run.ridges);
      plot_tf_svg(tf_csv, {est}, emit("spectrogram_" + run.label + ".svg"));
    }
    if (!result.truths.empty()) {
      std::vector<IfEstimate> truth;
      for (std::size_t p = 0; p < result.truths.size(); ++p) {
        IfEstimate e;
        e.mode_id = static_cast<int>(p);
        e.frequency = result.truths[p];
        e.amplitude = Eigen::VectorXd::Constant(result.truths[p].size(), cfg.modes[p].amplitude);
        truth.push_back(std::move(e));
      }
      const auto t = emit("truth.csv");
      write_estimates_csv(t, truth, cfg.sampling_rate);
      estimate_csvs.insert(estimate_csvs.begin(), t);
    }
    plot_estimates_svg(estimate_csvs, emit("estimates.svg"));
  }

  const auto rows = result.error_rows();
  if (!rows.empty()) {
    const auto err = emit("errors.csv");
    write_error_csv(err, rows);
    if (!single) plot_errors_svg(err, emit("errors.svg"));

    // Wide table: one row per sigma, one column per estimator (RMS over modes).
    std::vector<std::string> labels;
    for (const auto& run : result.runs) {
      if (std::find(labels.begin(), labels.end(), run.label) == labels.end()) labels.push_back(run.label);
    }
    std::string wide = "sigma";
    for (const auto& l : labels) wide += "," + l;
    wide += "\n";
    for (double sigma : cfg.sigma.values()) {
      wide += format_number(sigma);
      for (const auto& l : labels) {
        const auto* run = result.find(l, sigma);
        double acc = 0.0;
        for (const auto& e : run->errors) acc += e.rmse * e.rmse;
        wide += "," + format_number(run->errors.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(run->errors.size())));
      }
      wide += "\n";
    }
    write_text(emit("error_vs_sigma.csv"), wide);
  }

  json manifest;
  manifest["name"] = cfg.name;
  manifest["version"] = PRONYIF_VERSION;
  manifest["kind"] = cfg.reconstruction ? "reconstruction" : "custom";
  if (cfg.reconstruction) {
    manifest["note"] = "reconstruction on a synthetic stand-in signal; parameters chosen here, not the original data";
  }
  manifest["determinism"] =
      "no random numbers are used; re-running with the same binary and config reproduces every CSV byte for byte";
  manifest["config"] = json::parse(config_to_json(cfg));
  manifest["summary"] = json::array();
  for (const auto& r : rows) {
    manifest["summary"].push_back({{"sigma", r.sigma}, {"estimator", r.estimator}, {"mode_id", r.mode_id},
                                   {"rmse_hz", r.rmse}});
  }
  manifest["warnings"] = json::array();
  for (const auto& run : result.runs) {
    for (const auto& w : run.warnings) {
      manifest["warnings"].push_back(run.label + " sigma=" + format_number(run.sigma) + ": " + w);
    }
  }
  files.push_back(dir / "manifest.json");
  manifest["files"] = json::array();
  for (const auto& f : files) manifest["files"].push_back(f.filename().string());
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
  return files;
}

ExperimentResult run_figure1a(const ExperimentConfig& cfg) { return run_experiment(cfg); }
ExperimentResult run_figure1b(const ExperimentConfig& cfg) { return run_experiment(cfg); }
ExperimentResult run_figure2(const ExperimentConfig& cfg) { return run_experiment(cfg); }
ExperimentResult run_figure3(const ExperimentConfig& cfg) { return run_experiment(cfg); }

ExperimentResult run_custom(const std::filesystem::path& config_file) {
  return run_experiment(load_config(config_file));
}

double dominant_frequency(const Eigen::Ref<const Eigen::VectorXd>& series, double sampling_rate) {
  const Eigen::Index n = series.size();
  if (n < 4) throw std::invalid_argument("dominant_frequency: series too short");
  const Eigen::VectorXd centred = series.array() - series.mean();
  std::vector<double> in(centred.data(), centred.data() + n);
  std::vector<std::complex<double>> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  Eigen::Index best = 1;
  for (Eigen::Index k = 2; k <= n / 2; ++k) {
    if (std::abs(out[static_cast<std::size_t>(k)]) > std::abs(out[static_cast<std::size_t>(best)])) best = k;
  }
  return static_cast<double>(best) * sampling_rate / static_cast<double>(n);
}

double fitted_slope(const Eigen::Ref<const Eigen::VectorXd>& series, double sampling_rate, SampleRange range) {
  if (range.size() < 2 || range.begin < 0 || range.end > series.size()) {
    throw std::invalid_argument("fitted_slope: need at least two points inside the series");
  }
  const Eigen::VectorXd t =
      Eigen::VectorXd::LinSpaced(range.size(), static_cast<double>(range.begin), static_cast<double>(range.end - 1)) /
      sampling_rate;
  const Eigen::VectorXd y = series.segment(range.begin, range.size());
  const double tm = t.mean();
  const double ym = y.mean();
  return ((t.array() - tm) * (y.array() - ym)).sum() / (t.array() - tm).square().sum();
}

}  // namespace pronyif
