#pragma once

#include "pronyif/estimate.hpp"
#include "pronyif/signal.hpp"
#include "pronyif/stft.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pronyif {

// Raised when a slice cannot be solved (underflowing Fourier coefficients,
// coincident frequencies, root-finding failure).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sequence indexed by m = -order..order.
template <typename Scalar>
struct CenteredSequence {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
  int order = 0;

  Scalar operator()(int m) const { return values[m + order]; }
  Scalar& operator()(int m) { return values[m + order]; }
};

using FourierCoefficients = CenteredSequence<double>;
using MomentSequence = CenteredSequence<std::complex<double>>;

// Knobs of the slice solver and the track post-processing. Zero-valued
// entries are resolved against the STFT grid by `resolve`.
struct PronyConfig {
  int modes = 1;             // P
  int components = 0;        // Q; 0 means P (P + 1) / 2
  int truncation = 0;        // M0; 0 means Q
  double amplitude_ratio = 1e-2;   // rho in T_n = rho max_q |a_{q,n}|
  double jump_hz = 0.0;            // jump gate and tracking gate; 0 means 3 F_s / K
  double merge_hz = 0.0;           // roots closer than this are merged; 0 means F_s / (2 K)
  int jump_half_window = 5;        // sliding median over 2 w + 1 defined points
  int min_negative_run = 3;        // L_min
  double min_support = 0.1;        // tracks defined on fewer slices than this fraction are dropped
  double rank_tolerance = 1e-13;   // relative pivot threshold of the Yule-Walker solve
  double condition_limit = 1e6;    // slices above this Toeplitz condition are flagged
  double radius_tolerance = 1e-4;  // |root| - 1 beyond this is reported as off-circle
};

PronyConfig resolve(PronyConfig cfg, const StftParams& params);
void validate(const PronyConfig& cfg, const StftParams& params);

// c_m = exp(-pi m^2 / (2 sigma^2 F_s^2)) / (sqrt(2) sigma F_s), m = -order..order.
FourierCoefficients fourier_coeffs(double sigma, double sampling_rate, int order);

// l_m = (1 / (K c_m)) sum_k s_k exp(-i 2 pi m k / K) for |m| <= c.order.
MomentSequence project_slice(const Eigen::Ref<const Eigen::VectorXd>& slice, const FourierCoefficients& c);

struct AnnihilatingFilter {
  Eigen::VectorXcd taps;  // h_1..h_Q, h_0 = 1
  double condition = 0.0;
  Eigen::Index rank = 0;
};

// Solves the Toeplitz system T(j, k) = l_{j-k}, T h = -(l_j), k = 1..Q, over
// rows j = Q - M0 + 1..M0 where M0 = moments.order. With M0 = Q this is the
// square system on l_{1-Q}..l_Q; larger M0 gives a least-squares fit.
// Rank-deficient systems get the minimum-norm solution.
AnnihilatingFilter solve_annihilating(const MomentSequence& moments, int count, double rank_tolerance = 1e-13);

struct RootSet {
  Eigen::VectorXcd roots;
  Eigen::VectorXd frequency;  // in [0, F_s)
  Eigen::VectorXd radius;
};

// Roots of z^Q + h_1 z^{Q-1} + ... + h_Q mapped to eta = (-arg(z) / 2 pi mod 1) F_s.
RootSet roots_to_freqs(const Eigen::Ref<const Eigen::VectorXcd>& taps, double sampling_rate);

// Vandermonde solve W a = (l_0..l_{R-1}), W(m, q) = exp(-i 2 pi m eta_q / F_s),
// R = max(Q, moments.order); least squares when R > Q.
Eigen::VectorXcd solve_amplitudes(const MomentSequence& moments,
                                  const Eigen::Ref<const Eigen::VectorXd>& frequency, double sampling_rate);

struct SliceComponent {
  double frequency = 0.0;
  std::complex<double> amplitude;
  double radius = 1.0;
};

struct SliceEstimate {
  Eigen::Index n = 0;
  std::vector<SliceComponent> components;  // ascending frequency, at most Q, empty when degenerate
  double condition = 0.0;
  Eigen::Index rank = 0;
  bool degenerate = false;
  std::string reason;

  bool ill_conditioned(double limit) const { return condition > limit; }
  double max_amplitude() const;
};

SliceEstimate estimate_slice(const Eigen::Ref<const Eigen::VectorXd>& slice, const StftParams& params,
                             const PronyConfig& cfg, Eigen::Index n = 0);

std::vector<SliceEstimate> estimate_slices(const RealTF& spectrogram, const PronyConfig& cfg);

enum class TrackTag { Unclassified, Mode, Interference, Empty };

std::string to_string(TrackTag tag);

struct Track {
  int id = 0;
  std::vector<double> frequency;
  std::vector<double> amplitude;
  std::vector<bool> defined;
  std::vector<bool> interpolated;
  TrackTag tag = TrackTag::Unclassified;

  Eigen::Index size() const { return static_cast<Eigen::Index>(frequency.size()); }
  Eigen::Index defined_count() const;
};

struct TrackSet {
  std::vector<Track> tracks;
  Eigen::VectorXd reference_amplitude;  // max_q |a_{q,n}| of the raw slices
  double sampling_rate = 1.0;
};

// Greedy nearest-frequency association between consecutive slices. Each
// track predicts its next frequency by a linear fit of its last 2 w + 1
// points and may take a component within jump_hz per elapsed step of that
// prediction. Components below the amplitude floor are not associated.
TrackSet track(const std::vector<SliceEstimate>& slices, const PronyConfig& cfg, double sampling_rate);

// Removes points further than jump_hz from the median of the surrounding
// 2 w + 1 defined points of the same track.
TrackSet prune_jumps(TrackSet tracks, const PronyConfig& cfg);

// Removes points with |a| < rho max_q |a_{q,n}|.
TrackSet prune_amplitude(TrackSet tracks, const PronyConfig& cfg);

// Fills interior gaps by monotone cubic interpolation, extends the ends by
// the nearest defined value.
TrackSet fill_gaps(TrackSet tracks);

struct Classification {
  TrackSet tracks;           // all tracks, tagged
  std::vector<int> modes;    // indices into tracks.tracks, ascending mean frequency
  std::vector<int> interference;
  bool count_mismatch = false;
};

// Interference: amplitude below -rho max_q |a_{q,n}| on at least L_min
// consecutive samples. Tracks whose measured (non-interpolated) points cover
// less than min_support of the time axis are tagged Empty. Everything else
// is a mode.
Classification classify(TrackSet filled, const PronyConfig& cfg);

struct PronyResult {
  RealTF spectrogram;
  std::vector<SliceEstimate> slices;
  Classification classification;
  std::vector<IfEstimate> modes;  // IA is sqrt(max(a, 0)) / sigma, i.e. A_p
  std::vector<std::string> warnings;
};

PronyResult prony_if(const Signal& signal, const StftParams& params, const PronyConfig& cfg);

// Pipeline after the spectrogram, for callers holding one already.
PronyResult prony_if(const RealTF& spectrogram, const PronyConfig& cfg);

}  // namespace pronyif
