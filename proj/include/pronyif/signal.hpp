#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pronyif {

enum class ModeKind { PureTone, LinearChirp, SinusoidalFM };

// One AM/FM component with constant amplitude and an analytic phase law.
//
//   PureTone      phi(t) = w t
//   LinearChirp   phi(t) = w t + (rate / 2) t^2
//   SinusoidalFM  phi(t) = w t - depth / (2 pi rate) cos(2 pi rate t)
//
// `frequency` is w (Hz). For LinearChirp `rate` is the sweep rate in Hz/s,
// for SinusoidalFM it is the modulation rate in Hz.
struct ModeSpec {
  ModeKind kind = ModeKind::PureTone;
  double amplitude = 1.0;
  double frequency = 0.0;
  double rate = 0.0;
  double depth = 0.0;

  static ModeSpec tone(double amplitude, double frequency) {
    return {ModeKind::PureTone, amplitude, frequency, 0.0, 0.0};
  }
  static ModeSpec chirp(double amplitude, double frequency, double rate) {
    return {ModeKind::LinearChirp, amplitude, frequency, rate, 0.0};
  }
  static ModeSpec sinusoidal_fm(double amplitude, double frequency, double depth, double rate) {
    return {ModeKind::SinusoidalFM, amplitude, frequency, rate, depth};
  }
};

struct Signal {
  Eigen::VectorXcd samples;
  double sampling_rate = 1.0;

  Eigen::Index size() const { return samples.size(); }
  double duration() const { return static_cast<double>(samples.size()) / sampling_rate; }
  double time(Eigen::Index n) const { return static_cast<double>(n) / sampling_rate; }
};

class InvalidModeSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(ModeKind kind);
ModeKind mode_kind_from_string(const std::string& name);

// Phase in cycles. Evaluated in extended precision; the result is reduced
// modulo one so that large phases do not lose the fractional part.
long double phase_cycles(const ModeSpec& spec, long double t);

double true_if(const ModeSpec& spec, double t);

// Throws InvalidModeSpec if the amplitude or the IF is not positive on [0, duration].
void validate(const ModeSpec& spec, double duration);

Signal synthesize(const std::vector<ModeSpec>& specs, double sampling_rate, Eigen::Index samples);

// Ground-truth IF of one mode on the sample grid n / F_s.
Eigen::VectorXd true_if_series(const ModeSpec& spec, double sampling_rate, Eigen::Index samples);

// Rejects empty signals, non-positive F_s and non-finite samples.
void validate(const Signal& signal);

}  // namespace pronyif
