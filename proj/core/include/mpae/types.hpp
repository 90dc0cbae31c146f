#pragma once

#include <cstdint>
#include <utility>

namespace mpae {

// Shared result records. Exponents are in nats; snr is the linear
// signal-to-noise ratio P/(N0 W); dimension N counts real signal space
// dimensions (N = 2WT).

// Evaluation of a random-coding or expurgated exponent kernel.
struct GallagerEval {
  double rho = 0.0;
  double snr = 0.0;
  double beta = 0.0;   // optimizing beta of the closed form
  double value = 0.0;  // kernel value in nats
};

enum class GammaBranch { low, middle, high };

// Per-snr exponent coefficient of the unlimited-bandwidth regime.
struct GammaAlphaBound {
  double alpha = 0.0;
  double value = 0.0;
  GammaBranch branch = GammaBranch::low;
};

// Normalized chi-square tail exponents at threshold eta (per dimension,
// threshold measured relative to the per-dimension noise power).
struct ChiSquareExponents {
  double eta = 0.0;
  double snr = 0.0;
  double central_upper = 0.0;     // -(1/N) log P(central chi2_N >= N eta), N -> inf
  double noncentral_lower = 0.0;  // -(1/N) log P(noncentral chi2_N <= N eta), N -> inf
};

// Evaluation of the replication decoding exponent integrand Phi(rho, snr).
struct ReplicationEval {
  double rho = 0.0;
  double snr = 0.0;
  double eta_star = 0.0;  // minimizing threshold
  double value = 0.0;
};

struct OptScalarResult {
  double argopt = 0.0;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
  double tolerance_used = 0.0;
};

enum class BoundKind {
  dpt,                   // data-processing: alpha log(1 + snr)
  channel_coding,        // converse from channel coding over the band
  spherical_cap,         // converse from the cap-packing argument
  spectrum_replication,  // converse accounting for replicated spectra
  unlimited,             // unlimited-bandwidth exponent gamma_alpha * snr
  achievability          // orthogonal-signaling achievable exponent
};

// High-snr intercept c so that bound(alpha, snr) = alpha log snr + c + o(1).
struct HighSnrConstant {
  BoundKind kind = BoundKind::channel_coding;
  double alpha = 0.0;
  double value = 0.0;
  bool valid = true;  // spectrum_replication requires alpha >= 2
};

// First snr past which a converse leaves its low-snr linear regime.
struct CriticalSnr {
  BoundKind kind = BoundKind::channel_coding;
  double alpha = 0.0;
  double snr = 0.0;
  double bracket_lo = 0.0;  // verified sign-change bracket around the crossing
  double bracket_hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

// Equal high-snr intercepts of two converses at alpha.
struct Crossover {
  BoundKind first = BoundKind::channel_coding;
  BoundKind second = BoundKind::spherical_cap;
  double alpha = 0.0;
  bool analytic = false;  // true when a closed form pins the location
};

struct SimConfig {
  int n_dim = 2;              // real dimensions per codeword
  double snr = 1.0;           // linear snr
  double alpha = 2.0;         // error moment order
  int num_levels = 2;         // quantization cells / candidate bands M
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct SimReport {
  double empirical_mpae = 0.0;
  double empirical_error_prob = 0.0;
  std::pair<double, double> wilson_ci{0.0, 0.0};  // 95% interval on error prob
  std::int64_t trials_run = 0;
  double empirical_exponent = 0.0;   // -(2/N) log of the headline estimate
  double analytic_reference = 0.0;   // exact probability or analytic bound
  bool bound_untestable = false;     // reference below ~10/trials: too rare to probe
  double mean_signal_energy = 0.0;   // detector: sample mean energy of the true band
  double mean_noise_energy = 0.0;    // detector: sample mean energy per false band
};

}  // namespace mpae
