#include "pronyif/prony.hpp"

#include "pronyif/interp.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace pronyif {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

PronyConfig resolve(PronyConfig cfg, const StftParams& params) {
  if (cfg.components == 0) cfg.components = cfg.modes * (cfg.modes + 1) / 2;
  if (cfg.truncation == 0) cfg.truncation = cfg.components;
  if (cfg.jump_hz == 0.0) cfg.jump_hz = 3.0 * params.bin_width();
  if (cfg.merge_hz == 0.0) cfg.merge_hz = 0.5 * params.bin_width();
  validate(cfg, params);
  return cfg;
}

void validate(const PronyConfig& cfg, const StftParams& params) {
  if (cfg.modes < 1) throw std::invalid_argument("Prony: mode count P must be at least one");
  if (cfg.components < 1) throw std::invalid_argument("Prony: component count Q must be at least one");
  if (cfg.truncation < cfg.components) throw std::invalid_argument("Prony: truncation order M0 must be >= Q");
  if (params.bins < 2 * cfg.truncation + 1) throw std::invalid_argument("Prony: need K >= 2 M0 + 1");
  if (!(cfg.amplitude_ratio > 0.0 && cfg.amplitude_ratio < 1.0)) {
    throw std::invalid_argument("Prony: amplitude ratio must lie in (0, 1)");
  }
  if (!(cfg.jump_hz > 0.0)) throw std::invalid_argument("Prony: jump gate must be positive");
  if (!(cfg.merge_hz >= 0.0)) throw std::invalid_argument("Prony: merge distance must be non-negative");
  if (cfg.jump_half_window < 1) throw std::invalid_argument("Prony: jump window must be at least one");
  if (cfg.min_negative_run < 1) throw std::invalid_argument("Prony: negative-run length must be at least one");
}

FourierCoefficients fourier_coeffs(double sigma, double sampling_rate, int order) {
  if (!(sigma > 0.0) || !(sampling_rate > 0.0)) {
    throw std::invalid_argument("fourier_coeffs: sigma and F_s must be positive");
  }
  if (order < 0) throw std::invalid_argument("fourier_coeffs: negative order");
  FourierCoefficients c;
  c.order = order;
  c.values.resize(2 * order + 1);
  const double scale = sigma * sampling_rate;
  const double c0 = 1.0 / (std::numbers::sqrt2 * scale);
  for (int m = -order; m <= order; ++m) {
    c(m) = c0 * std::exp(-std::numbers::pi * m * m / (2.0 * scale * scale));
  }
  return c;
}

MomentSequence project_slice(const Eigen::Ref<const Eigen::VectorXd>& slice, const FourierCoefficients& c) {
  const Eigen::Index k_bins = slice.size();
  if (k_bins < 2 * c.order + 1) throw std::invalid_argument("project_slice: need K >= 2 M0 + 1");
  if ((c.values.array() < 1e-300).any()) {
    throw NumericalError("project_slice: Fourier coefficient underflow, sigma F_s too small for M0");
  }
  // The DFT sums are accumulated in extended precision: their rounding error
  // dominates the frequency error of the whole slice solve otherwise.
  using Wide = long double;
  const Wide step = -2.0L * std::numbers::pi_v<Wide> / static_cast<Wide>(k_bins);
  MomentSequence l;
  l.order = c.order;
  l.values.resize(2 * c.order + 1);
  for (int m = 0; m <= c.order; ++m) {
    std::complex<Wide> sum(0.0L, 0.0L);
    for (Eigen::Index k = 0; k < k_bins; ++k) {
      const Eigen::Index phase = (static_cast<Eigen::Index>(m) * k) % k_bins;
      sum += static_cast<Wide>(slice[k]) * std::polar(1.0L, step * static_cast<Wide>(phase));
    }
    const std::complex<double> acc(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    // real input: the negative index is the conjugate
    l(m) = acc / (static_cast<double>(k_bins) * c(m));
    if (m > 0) l(-m) = std::conj(acc) / (static_cast<double>(k_bins) * c(-m));
  }
  return l;
}

AnnihilatingFilter solve_annihilating(const MomentSequence& moments, int count, double rank_tolerance) {
  if (count < 1) throw std::invalid_argument("solve_annihilating: Q must be at least one");
  if (moments.order < count) throw std::invalid_argument("solve_annihilating: moments up to |m| = Q are needed");
  // Rows j = Q - M0 + 1..M0 use every moment in [1 - M0, M0]; M0 = Q gives
  // the square system.
  const int order = moments.order;
  const int rows = 2 * order - count;
  Eigen::MatrixXcd toeplitz(rows, count);
  Eigen::VectorXcd rhs(rows);
  for (int r = 0; r < rows; ++r) {
    const int j = count - order + 1 + r;
    for (int k = 1; k <= count; ++k) toeplitz(r, k - 1) = moments(j - k);
    rhs[r] = -moments(j);
  }

  AnnihilatingFilter out;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(toeplitz);
  const auto& sv = svd.singularValues();
  out.condition = sv[count - 1] > 0.0 ? sv[0] / sv[count - 1] : std::numeric_limits<double>::infinity();

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod;
  cod.setThreshold(rank_tolerance);
  cod.compute(toeplitz);
  out.rank = cod.rank();
  out.taps = cod.solve(rhs);
  return out;
}

RootSet roots_to_freqs(const Eigen::Ref<const Eigen::VectorXcd>& taps, double sampling_rate) {
  const Eigen::Index q = taps.size();
  if (q < 1) throw std::invalid_argument("roots_to_freqs: empty filter");
  if (!taps.allFinite()) throw NumericalError("roots_to_freqs: non-finite filter taps");

  RootSet out;
  if (q == 1) {
    out.roots = -taps;
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(q, q);
    companion.row(0) = -taps.transpose();
    companion.diagonal(-1).setOnes();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw NumericalError("roots_to_freqs: eigenvalue iteration failed");
    out.roots = solver.eigenvalues();
  }
  out.frequency.resize(q);
  out.radius.resize(q);
  for (Eigen::Index i = 0; i < q; ++i) {
    const double cycles = -std::arg(out.roots[i]) / kTwoPi;
    double wrapped = cycles - std::floor(cycles);
    if (wrapped >= 1.0) wrapped = 0.0;
    out.frequency[i] = wrapped * sampling_rate;
    out.radius[i] = std::abs(out.roots[i]);
  }
  return out;
}

Eigen::VectorXcd solve_amplitudes(const MomentSequence& moments, const Eigen::Ref<const Eigen::VectorXd>& frequency,
                                  double sampling_rate) {
  const Eigen::Index q = frequency.size();
  if (q < 1) throw std::invalid_argument("solve_amplitudes: no frequencies");
  if (moments.order < q - 1) throw std::invalid_argument("solve_amplitudes: moments up to Q - 1 are needed");
  Eigen::VectorXcd nodes(q);
  for (Eigen::Index i = 0; i < q; ++i) nodes[i] = std::polar(1.0, -kTwoPi * frequency[i] / sampling_rate);
  for (Eigen::Index i = 0; i < q; ++i) {
    for (Eigen::Index j = i + 1; j < q; ++j) {
      if (std::abs(nodes[i] - nodes[j]) < 1e-12) {
        throw NumericalError("solve_amplitudes: coincident frequencies make the Vandermonde system singular");
      }
    }
  }
  // m = 0..max(Q, M0) - 1; least squares when M0 > Q.
  const Eigen::Index rows = std::max<Eigen::Index>(q, moments.order);
  Eigen::MatrixXcd vandermonde(rows, q);
  Eigen::VectorXcd rhs(rows);
  for (Eigen::Index m = 0; m < rows; ++m) {
    for (Eigen::Index i = 0; i < q; ++i) {
      vandermonde(m, i) = std::polar(1.0, -kTwoPi * static_cast<double>(m) * frequency[i] / sampling_rate);
    }
    rhs[m] = moments(static_cast<int>(m));
  }
  return vandermonde.colPivHouseholderQr().solve(rhs);
}

double SliceEstimate::max_amplitude() const {
  double out = 0.0;
  for (const auto& c : components) out = std::max(out, std::abs(c.amplitude));
  return out;
}

SliceEstimate estimate_slice(const Eigen::Ref<const Eigen::VectorXd>& slice, const StftParams& params,
                             const PronyConfig& cfg, Eigen::Index n) {
  SliceEstimate out;
  out.n = n;
  try {
    const FourierCoefficients c = fourier_coeffs(params.sigma, params.sampling_rate, cfg.truncation);
    const MomentSequence l = project_slice(slice, c);
    const AnnihilatingFilter filter = solve_annihilating(l, cfg.components, cfg.rank_tolerance);
    out.condition = filter.condition;
    out.rank = filter.rank;
    const RootSet roots = roots_to_freqs(filter.taps, params.sampling_rate);
    Eigen::VectorXcd amplitude = solve_amplitudes(l, roots.frequency, params.sampling_rate);
    if (!amplitude.allFinite() || !roots.frequency.allFinite()) {
      throw NumericalError("estimate_slice: non-finite solution");
    }
    for (int q = 0; q < cfg.components; ++q) {
      out.components.push_back({roots.frequency[q], amplitude[q], roots.radius[q]});
    }
    std::stable_sort(out.components.begin(), out.components.end(),
                     [](const SliceComponent& a, const SliceComponent& b) { return a.frequency < b.frequency; });

    // Surplus roots can split one Gaussian into a near-coincident pair with
    // partly cancelling amplitudes. Merge such pairs and re-solve.
    std::vector<SliceComponent> merged;
    for (const auto& comp : out.components) {
      if (!merged.empty() && comp.frequency - merged.back().frequency < cfg.merge_hz) {
        auto& last = merged.back();
        const double wa = std::abs(last.amplitude);
        const double wb = std::abs(comp.amplitude);
        const double w = wa + wb > 0.0 ? wb / (wa + wb) : 0.5;
        last.frequency += w * (comp.frequency - last.frequency);
        last.radius += w * (comp.radius - last.radius);
        last.amplitude += comp.amplitude;
      } else {
        merged.push_back(comp);
      }
    }
    if (merged.size() < out.components.size()) {
      Eigen::VectorXd frequency(static_cast<Eigen::Index>(merged.size()));
      for (std::size_t i = 0; i < merged.size(); ++i) frequency[static_cast<Eigen::Index>(i)] = merged[i].frequency;
      amplitude = solve_amplitudes(l, frequency, params.sampling_rate);
      if (!amplitude.allFinite()) throw NumericalError("estimate_slice: non-finite solution");
      for (std::size_t i = 0; i < merged.size(); ++i) merged[i].amplitude = amplitude[static_cast<Eigen::Index>(i)];
      out.components = std::move(merged);
    }
  } catch (const NumericalError& e) {
    out.components.clear();
    out.degenerate = true;
    out.reason = e.what();
  }
  return out;
}

std::vector<SliceEstimate> estimate_slices(const RealTF& spectrogram, const PronyConfig& cfg) {
  const Eigen::Index n_times = spectrogram.times();
  const Eigen::Index radius = spectrogram.params.radius;
  std::vector<SliceEstimate> out(static_cast<std::size_t>(n_times));
  for (Eigen::Index n = 0; n < n_times; ++n) {
    auto& slice = out[static_cast<std::size_t>(n)];
    // Zero padding truncates the window here and the slice is no longer a
    // sum of Gaussians.
    if (n < radius || n + radius >= n_times) {
      slice.n = n;
      slice.degenerate = true;
      slice.reason = "window extends past the signal";
      continue;
    }
    const Eigen::VectorXd row = spectrogram.values.row(n).transpose();
    slice = estimate_slice(row, spectrogram.params, cfg, n);
  }
  return out;
}

std::string to_string(TrackTag tag) {
  switch (tag) {
    case TrackTag::Unclassified:
      return "unclassified";
    case TrackTag::Mode:
      return "mode";
    case TrackTag::Interference:
      return "interference";
    case TrackTag::Empty:
      return "empty";
  }
  return "unknown";
}

Eigen::Index Track::defined_count() const {
  return std::count(defined.begin(), defined.end(), true);
}

namespace {

// Linear least-squares extrapolation of the last `depth` defined points.
class TrackPredictor {
 public:
  explicit TrackPredictor(std::size_t depth) : depth_(depth) {}

  bool started() const { return !times_.empty(); }
  Eigen::Index last_time() const { return times_.back(); }

  void push(Eigen::Index n, double frequency) {
    times_.push_back(n);
    values_.push_back(frequency);
    if (times_.size() > depth_) {
      times_.erase(times_.begin());
      values_.erase(values_.begin());
    }
  }

  double predict(Eigen::Index n) const {
    const std::size_t count = times_.size();
    if (count < 2) return values_.back();
    double mt = 0.0, mv = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      mt += static_cast<double>(times_[i]);
      mv += values_[i];
    }
    mt /= static_cast<double>(count);
    mv /= static_cast<double>(count);
    double stt = 0.0, stv = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double dt = static_cast<double>(times_[i]) - mt;
      stt += dt * dt;
      stv += dt * (values_[i] - mv);
    }
    return mv + stv / stt * (static_cast<double>(n) - mt);
  }

 private:
  std::size_t depth_;
  std::vector<Eigen::Index> times_;
  std::vector<double> values_;
};

}  // namespace

TrackSet track(const std::vector<SliceEstimate>& slices, const PronyConfig& cfg, double sampling_rate) {
  const auto n_times = static_cast<Eigen::Index>(slices.size());
  const auto q_count = static_cast<std::size_t>(cfg.components);

  TrackSet out;
  out.sampling_rate = sampling_rate;
  out.reference_amplitude = Eigen::VectorXd::Zero(n_times);
  out.tracks.resize(q_count);
  for (std::size_t q = 0; q < q_count; ++q) {
    auto& t = out.tracks[q];
    t.id = static_cast<int>(q);
    t.frequency.assign(static_cast<std::size_t>(n_times), 0.0);
    t.amplitude.assign(static_cast<std::size_t>(n_times), 0.0);
    t.defined.assign(static_cast<std::size_t>(n_times), false);
    t.interpolated.assign(static_cast<std::size_t>(n_times), false);
  }

  std::vector<TrackPredictor> predictors(q_count, TrackPredictor(2 * static_cast<std::size_t>(cfg.jump_half_window) + 1));

  struct Candidate {
    double cost;
    std::size_t track;
    std::size_t component;
  };
  std::vector<Candidate> candidates;

  for (Eigen::Index n = 0; n < n_times; ++n) {
    const auto& slice = slices[static_cast<std::size_t>(n)];
    out.reference_amplitude[n] = slice.max_amplitude();
    if (slice.degenerate || slice.components.empty()) continue;

    // Components under the amplitude floor cannot survive pruning; keeping
    // them out of the association stops them from capturing a track.
    const double floor = cfg.amplitude_ratio * out.reference_amplitude[n];
    std::vector<bool> component_used(slice.components.size(), false);
    for (std::size_t c = 0; c < slice.components.size(); ++c) {
      if (std::abs(slice.components[c].amplitude) < floor) component_used[c] = true;
    }

    const auto assign = [&](std::size_t q, std::size_t c) {
      auto& t = out.tracks[q];
      const auto& comp = slice.components[c];
      t.frequency[static_cast<std::size_t>(n)] = comp.frequency;
      t.amplitude[static_cast<std::size_t>(n)] = comp.amplitude.real();
      t.defined[static_cast<std::size_t>(n)] = true;
      predictors[q].push(n, comp.frequency);
      component_used[c] = true;
    };

    candidates.clear();
    for (std::size_t q = 0; q < q_count; ++q) {
      if (!predictors[q].started()) continue;
      const double predicted = predictors[q].predict(n);
      const double gate = cfg.jump_hz * static_cast<double>(n - predictors[q].last_time());
      for (std::size_t c = 0; c < slice.components.size(); ++c) {
        if (component_used[c]) continue;
        const double cost = std::abs(slice.components[c].frequency - predicted);
        if (cost <= gate) candidates.push_back({cost, q, c});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.cost < b.cost; });
    std::vector<bool> track_used(q_count, false);
    for (const auto& cand : candidates) {
      if (track_used[cand.track] || component_used[cand.component]) continue;
      track_used[cand.track] = true;
      assign(cand.track, cand.component);
    }
    // Tracks that have not started take leftover components in frequency order.
    std::size_t next = 0;
    for (std::size_t q = 0; q < q_count; ++q) {
      if (predictors[q].started()) continue;
      while (next < component_used.size() && component_used[next]) ++next;
      if (next == component_used.size()) break;
      assign(q, next);
    }
  }
  return out;
}

TrackSet prune_jumps(TrackSet tracks, const PronyConfig& cfg) {
  const auto w = static_cast<std::ptrdiff_t>(cfg.jump_half_window);
  std::vector<double> window;
  for (auto& t : tracks.tracks) {
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n < t.defined.size(); ++n) {
      if (t.defined[n]) idx.push_back(n);
    }
    std::vector<bool> drop(idx.size(), false);
    const auto count = static_cast<std::ptrdiff_t>(idx.size());
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - w);
      const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(count - 1, i + w);
      window.clear();
      for (std::ptrdiff_t j = lo; j <= hi; ++j) window.push_back(t.frequency[idx[static_cast<std::size_t>(j)]]);
      std::sort(window.begin(), window.end());
      const std::size_t mid = window.size() / 2;
      const double median = window.size() % 2 == 1 ? window[mid] : 0.5 * (window[mid - 1] + window[mid]);
      if (std::abs(t.frequency[idx[static_cast<std::size_t>(i)]] - median) > cfg.jump_hz) {
        drop[static_cast<std::size_t>(i)] = true;
      }
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (drop[i]) t.defined[idx[i]] = false;
    }
  }
  return tracks;
}

TrackSet prune_amplitude(TrackSet tracks, const PronyConfig& cfg) {
  for (auto& t : tracks.tracks) {
    for (std::size_t n = 0; n < t.defined.size(); ++n) {
      if (!t.defined[n]) continue;
      const double threshold = cfg.amplitude_ratio * tracks.reference_amplitude[static_cast<Eigen::Index>(n)];
      if (std::abs(t.amplitude[n]) < threshold) t.defined[n] = false;
    }
  }
  return tracks;
}

TrackSet fill_gaps(TrackSet tracks) {
  for (auto& t : tracks.tracks) {
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n < t.defined.size(); ++n) {
      if (t.defined[n]) idx.push_back(n);
    }
    if (idx.empty() || idx.size() == t.defined.size()) continue;

    const auto m = static_cast<Eigen::Index>(idx.size());
    Eigen::VectorXd knots(m), freq(m), amp(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const std::size_t n = idx[static_cast<std::size_t>(i)];
      knots[i] = static_cast<double>(n);
      freq[i] = t.frequency[n];
      amp[i] = t.amplitude[n];
    }
    const MonotoneCubic freq_interp(knots, freq);
    const MonotoneCubic amp_interp(knots, amp);
    for (std::size_t n = 0; n < t.defined.size(); ++n) {
      if (t.defined[n]) continue;
      const auto x = static_cast<double>(n);
      t.frequency[n] = freq_interp(x);
      t.amplitude[n] = amp_interp(x);
      t.defined[n] = true;
      t.interpolated[n] = true;
    }
  }
  return tracks;
}

Classification classify(TrackSet filled, const PronyConfig& cfg) {
  Classification out;
  std::vector<std::pair<double, int>> modes;
  for (std::size_t i = 0; i < filled.tracks.size(); ++i) {
    auto& t = filled.tracks[i];
    const auto length = t.frequency.size();
    std::size_t measured = 0;
    for (std::size_t n = 0; n < length; ++n) {
      if (t.defined[n] && !t.interpolated[n]) ++measured;
    }
    if (length == 0 || static_cast<double>(measured) < cfg.min_support * static_cast<double>(length)) {
      t.tag = TrackTag::Empty;
      continue;
    }

    int run = 0;
    int longest = 0;
    for (std::size_t n = 0; n < length; ++n) {
      const double threshold = cfg.amplitude_ratio * filled.reference_amplitude[static_cast<Eigen::Index>(n)];
      run = (t.defined[n] && t.amplitude[n] < -threshold) ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    if (longest >= cfg.min_negative_run) {
      t.tag = TrackTag::Interference;
      out.interference.push_back(static_cast<int>(i));
    } else {
      t.tag = TrackTag::Mode;
      double mean = 0.0;
      for (double f : t.frequency) mean += f;
      modes.emplace_back(mean / static_cast<double>(length), static_cast<int>(i));
    }
  }
  std::stable_sort(modes.begin(), modes.end());
  for (const auto& [mean, i] : modes) out.modes.push_back(i);
  out.count_mismatch = static_cast<int>(out.modes.size()) != cfg.modes;
  out.tracks = std::move(filled);
  return out;
}

PronyResult prony_if(const RealTF& spectrogram, const PronyConfig& config) {
  const PronyConfig cfg = resolve(config, spectrogram.params);
  PronyResult out;
  out.spectrogram = spectrogram;
  out.slices = estimate_slices(spectrogram, cfg);

  std::size_t degenerate = 0;
  std::size_t edge = 0;
  for (const auto& s : out.slices) {
    if (!s.degenerate) continue;
    if (s.n < spectrogram.params.radius || s.n + spectrogram.params.radius >= spectrogram.times()) {
      ++edge;
    } else {
      ++degenerate;
    }
  }
  if (edge == out.slices.size()) {
    throw NumericalError("prony_if: signal shorter than the analysis window, no slice can be solved");
  }
  if (degenerate > 0) {
    out.warnings.push_back(std::to_string(degenerate) + " degenerate interior slice(s) left as gaps");
  }
  std::size_t mismatch = 0;
  for (const auto& s : out.slices) {
    const double floor = cfg.amplitude_ratio * s.max_amplitude();
    for (const auto& c : s.components) {
      const double mag = std::abs(c.amplitude);
      if (mag >= floor && std::abs(c.amplitude.imag()) > 1e-3 * mag) ++mismatch;
    }
  }
  if (mismatch > 0) {
    out.warnings.push_back(std::to_string(mismatch) +
                           " component(s) with imaginary amplitude above 1e-3 |a| (model mismatch)");
  }

  TrackSet tracks = track(out.slices, cfg, spectrogram.params.sampling_rate);
  tracks = prune_jumps(std::move(tracks), cfg);
  tracks = prune_amplitude(std::move(tracks), cfg);
  tracks = fill_gaps(std::move(tracks));
  out.classification = classify(std::move(tracks), cfg);
  if (out.classification.count_mismatch) {
    out.warnings.push_back(std::to_string(out.classification.modes.size()) + " mode track(s) survived, expected " +
                           std::to_string(cfg.modes));
  }

  const double sigma = spectrogram.params.sigma;
  int mode_id = 0;
  for (int i : out.classification.modes) {
    const Track& t = out.classification.tracks.tracks[static_cast<std::size_t>(i)];
    IfEstimate est;
    est.mode_id = mode_id++;
    est.frequency = Eigen::Map<const Eigen::VectorXd>(t.frequency.data(), t.size());
    est.amplitude.resize(t.size());
    for (Eigen::Index n = 0; n < t.size(); ++n) {
      est.amplitude[n] = std::sqrt(std::max(t.amplitude[static_cast<std::size_t>(n)], 0.0)) / sigma;
    }
    est.interpolated = t.interpolated;
    out.modes.push_back(std::move(est));
  }
  return out;
}

PronyResult prony_if(const Signal& signal, const StftParams& params, const PronyConfig& cfg) {
  return prony_if(spectrogram(stft(signal, params)), cfg);
}

}  // namespace pronyif
