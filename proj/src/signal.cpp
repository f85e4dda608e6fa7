#include "pronyif/signal.hpp"

#include <cmath>
#include <numbers>

namespace pronyif {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;

// Smallest IF reached on [0, duration].
double min_if(const ModeSpec& spec, double duration) {
  switch (spec.kind) {
    case ModeKind::PureTone:
      return spec.frequency;
    case ModeKind::LinearChirp:
      return std::min(spec.frequency, spec.frequency + spec.rate * duration);
    case ModeKind::SinusoidalFM: {
      double lo = std::min(true_if(spec, 0.0), true_if(spec, duration));
      if (spec.rate > 0.0) {
        // extrema of sin at t = (k + 1/4) / rate and (k + 3/4) / rate
        const double last = duration * spec.rate;
        for (double k = 0.0; k <= last; k += 1.0) {
          for (double frac : {0.25, 0.75}) {
            const double t = (k + frac) / spec.rate;
            if (t <= duration) lo = std::min(lo, true_if(spec, t));
          }
        }
      }
      return lo;
    }
  }
  return spec.frequency;
}

}  // namespace

std::string to_string(ModeKind kind) {
  switch (kind) {
    case ModeKind::PureTone:
      return "pure_tone";
    case ModeKind::LinearChirp:
      return "linear_chirp";
    case ModeKind::SinusoidalFM:
      return "sinusoidal_fm";
  }
  return "unknown";
}

ModeKind mode_kind_from_string(const std::string& name) {
  if (name == "pure_tone" || name == "tone") return ModeKind::PureTone;
  if (name == "linear_chirp" || name == "chirp") return ModeKind::LinearChirp;
  if (name == "sinusoidal_fm" || name == "fm") return ModeKind::SinusoidalFM;
  throw InvalidModeSpec("unknown mode kind '" + name + "'");
}

long double phase_cycles(const ModeSpec& spec, long double t) {
  const long double w = spec.frequency;
  long double phase = w * t;
  switch (spec.kind) {
    case ModeKind::PureTone:
      break;
    case ModeKind::LinearChirp:
      phase += 0.5L * static_cast<long double>(spec.rate) * t * t;
      break;
    case ModeKind::SinusoidalFM: {
      const long double rate = spec.rate;
      phase -= static_cast<long double>(spec.depth) / (2.0L * kPiL * rate) *
               std::cos(2.0L * kPiL * rate * t);
      break;
    }
  }
  return phase - std::floor(phase);
}

double true_if(const ModeSpec& spec, double t) {
  switch (spec.kind) {
    case ModeKind::PureTone:
      return spec.frequency;
    case ModeKind::LinearChirp:
      return spec.frequency + spec.rate * t;
    case ModeKind::SinusoidalFM:
      return spec.frequency + spec.depth * std::sin(2.0 * std::numbers::pi * spec.rate * t);
  }
  return spec.frequency;
}

void validate(const ModeSpec& spec, double duration) {
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(spec.amplitude) || !finite(spec.frequency) || !finite(spec.rate) ||
      !finite(spec.depth)) {
    throw InvalidModeSpec("mode parameters must be finite");
  }
  if (spec.amplitude <= 0.0) {
    throw InvalidModeSpec("mode amplitude must be positive, got " + std::to_string(spec.amplitude));
  }
  if (spec.kind == ModeKind::SinusoidalFM && spec.rate <= 0.0) {
    throw InvalidModeSpec("sinusoidal FM needs a positive modulation rate");
  }
  // DC (zero IF) is accepted; a negative IF anywhere on the support is not.
  const double lo = min_if(spec, duration);
  if (lo < 0.0) {
    throw InvalidModeSpec(to_string(spec.kind) + " mode reaches a negative IF (" +
                          std::to_string(lo) + " Hz) on the signal support");
  }
}

Signal synthesize(const std::vector<ModeSpec>& specs, double sampling_rate, Eigen::Index samples) {
  if (specs.empty()) throw InvalidModeSpec("at least one mode is required");
  if (!(sampling_rate > 0.0)) throw std::invalid_argument("sampling rate must be positive");
  if (samples < 1) throw std::invalid_argument("signal needs at least one sample");
  const double duration = static_cast<double>(samples - 1) / sampling_rate;
  for (const auto& spec : specs) validate(spec, duration);

  Signal out;
  out.sampling_rate = sampling_rate;
  out.samples = Eigen::VectorXcd::Zero(samples);
  const long double fs = sampling_rate;
  for (const auto& spec : specs) {
    for (Eigen::Index n = 0; n < samples; ++n) {
      const long double angle = 2.0L * kPiL * phase_cycles(spec, static_cast<long double>(n) / fs);
      out.samples[n] += spec.amplitude * std::complex<double>(static_cast<double>(std::cos(angle)),
                                                              static_cast<double>(std::sin(angle)));
    }
  }
  return out;
}

Eigen::VectorXd true_if_series(const ModeSpec& spec, double sampling_rate, Eigen::Index samples) {
  Eigen::VectorXd out(samples);
  for (Eigen::Index n = 0; n < samples; ++n) out[n] = true_if(spec, n / sampling_rate);
  return out;
}

void validate(const Signal& signal) {
  if (signal.samples.size() < 1) throw std::invalid_argument("signal is empty");
  if (!(signal.sampling_rate > 0.0)) throw std::invalid_argument("sampling rate must be positive");
  if (!signal.samples.allFinite()) throw std::invalid_argument("signal contains non-finite samples");
}

}  // namespace pronyif
