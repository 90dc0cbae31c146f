// Monte Carlo simulators. Trials are partitioned into fixed-size batches;
// each batch owns a counter-seeded xoshiro256++ stream and partial sums are
// reduced in batch order, so results are bitwise reproducible for a given
// (config, seed) at any thread count.

#include "mpae/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "mpae/optim.hpp"
#include "mpae/replication.hpp"

namespace mpae {

namespace {

constexpr std::int64_t batch_trials = 4096;
constexpr std::int64_t max_trials = 10'000'000;

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct xoshiro256pp {
  std::uint64_t s[4];

  xoshiro256pp(std::uint64_t seed, std::uint64_t stream) {
    // key the state from (seed, stream) so batch b is the same stream no
    // matter which thread runs it
    std::uint64_t x = seed ^ (0xd1342543de82ef95ULL * (stream + 1));
    for (auto& w : s) w = splitmix64(x);
    if (!(s[0] | s[1] | s[2] | s[3])) s[0] = 1;
  }

  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t next() {
    std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  double uniform() {  // (0, 1], 53-bit
    return ((next() >> 11) + 1) * 0x1.0p-53;
  }

  bool have_spare = false;
  double spare = 0.0;

  double normal() {  // polar method
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u, v, q;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    double m = std::sqrt(-2.0 * std::log(q) / q);
    spare = v * m;
    have_spare = true;
    return u * m;
  }
};

struct batch_sums {
  double mpae = 0.0;
  std::int64_t errors = 0;
  double signal_energy = 0.0;
  double noise_energy = 0.0;
};

template <typename TrialFn>
batch_sums run_batches(const SimConfig& cfg, TrialFn&& per_trial) {
  const std::int64_t nbatch = (cfg.trials + batch_trials - 1) / batch_trials;
  std::vector<batch_sums> partial(static_cast<std::size_t>(nbatch));
  std::atomic<std::int64_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::int64_t b = cursor.fetch_add(1);
      if (b >= nbatch) return;
      xoshiro256pp rng(cfg.seed, static_cast<std::uint64_t>(b));
      std::int64_t count = std::min(batch_trials, cfg.trials - b * batch_trials);
      batch_sums s;
      for (std::int64_t t = 0; t < count; ++t) per_trial(rng, s);
      partial[static_cast<std::size_t>(b)] = s;
    }
  };
  int threads = cfg.threads > 1 ? cfg.threads : 1;
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  batch_sums total;
  for (const auto& s : partial) {  // fixed order: deterministic reduction
    total.mpae += s.mpae;
    total.errors += s.errors;
    total.signal_energy += s.signal_energy;
    total.noise_energy += s.noise_energy;
  }
  return total;
}

void check_config(const SimConfig& cfg, bool orthogonal) {
  if (cfg.n_dim < 2)
    throw std::domain_error("simulate: n_dim must be >= 2");
  if (!std::isfinite(cfg.snr) || cfg.snr < 0.0)
    throw std::domain_error("simulate: snr must be finite and >= 0");
  if (!std::isfinite(cfg.alpha) || cfg.alpha <= 0.0)
    throw std::domain_error("simulate: alpha must be > 0");
  if (cfg.trials < 1 || cfg.trials > max_trials)
    throw std::domain_error("simulate: trials must lie in [1, 1e7]");
  if (orthogonal) {
    if (cfg.num_levels < 2 || cfg.num_levels > cfg.n_dim)
      throw std::domain_error("simulate: num_levels must lie in [2, n_dim]");
  } else if (cfg.num_levels < 1) {
    throw std::domain_error("simulate: num_levels must be >= 1");
  }
  if (cfg.threads < 1 || cfg.threads > 256)
    throw std::domain_error("simulate: threads must lie in [1, 256]");
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

// exact M-ary orthogonal error probability: 1 - E Phi(Z + amp)^(M-1)
double orthogonal_error_exact(double amp, int m) {
  auto f = [amp, m](double y) {
    return normal_pdf(y - amp) * std::pow(normal_cdf(y), m - 1);
  };
  double p_correct = integrate_adaptive(f, amp - 13.5, amp + 13.5, 1e-12);
  return std::clamp(1.0 - p_correct, 0.0, 1.0);
}

void fill_common(SimReport& rep, const SimConfig& cfg, const batch_sums& total) {
  rep.trials_run = cfg.trials;
  rep.empirical_error_prob = static_cast<double>(total.errors) / cfg.trials;
  rep.empirical_mpae = total.mpae / cfg.trials;
  rep.wilson_ci = wilson_interval(total.errors, cfg.trials);
}

double exponent_of(double estimate, int n_dim) {
  if (estimate <= 0.0) return HUGE_VAL;  // no events observed
  return -(2.0 / n_dim) * std::log(estimate);
}

}  // namespace

SimReport simulate_quantize_orthogonal(const SimConfig& cfg, double u_true) {
  check_config(cfg, true);
  if (!(u_true >= 0.0) || u_true >= 1.0)
    throw std::domain_error("simulate: u_true must lie in [0, 1)");
  const int m = cfg.num_levels;
  const double amp = std::sqrt(static_cast<double>(cfg.n_dim) * cfg.snr);
  const int cell = std::min(static_cast<int>(u_true * m), m - 1);
  const double alpha = cfg.alpha;

  batch_sums total = run_batches(cfg, [&](xoshiro256pp& rng, batch_sums& s) {
    // only the M candidate coordinates enter the argmax; the remaining
    // N - M dimensions carry no signal and never matter
    int best = 0;
    double best_y = -HUGE_VAL;
    for (int j = 0; j < m; ++j) {
      double y = rng.normal() + (j == cell ? amp : 0.0);
      if (y > best_y) {
        best_y = y;
        best = j;
      }
    }
    if (best != cell) ++s.errors;
    double dev = std::fabs((best + 0.5) / m - u_true);
    s.mpae += std::pow(dev, alpha);
  });

  SimReport rep;
  fill_common(rep, cfg, total);
  rep.empirical_exponent = exponent_of(rep.empirical_mpae, cfg.n_dim);
  rep.analytic_reference = orthogonal_error_exact(amp, m);
  rep.bound_untestable = rep.analytic_reference * cfg.trials < 10.0;
  return rep;
}

SimReport simulate_replication_detector(const SimConfig& cfg, int band_true) {
  check_config(cfg, false);
  if (band_true < 0 || band_true >= cfg.num_levels)
    throw std::domain_error("simulate: band_true out of range");
  const int m = cfg.num_levels;
  const int n = cfg.n_dim;
  const double amp = std::sqrt(static_cast<double>(n) * cfg.snr);
  const double alpha = cfg.alpha;
  const double u_band = (band_true + 0.5) / m;

  batch_sums total = run_batches(cfg, [&](xoshiro256pp& rng, batch_sums& s) {
    int best = 0;
    double best_q = -1.0;
    double q_true = 0.0;
    double q_rest = 0.0;
    for (int b = 0; b < m; ++b) {
      double q = 0.0;
      for (int k = 0; k < n; ++k) {
        double z = rng.normal();
        if (b == band_true && k == 0) z += amp;  // signal mean on one axis
        q += z * z;
      }
      if (b == band_true) q_true = q; else q_rest += q;
      if (q > best_q) {
        best_q = q;
        best = b;
      }
    }
    s.signal_energy += q_true;
    if (m > 1) s.noise_energy += q_rest / (m - 1);
    if (best != band_true) ++s.errors;
    double dev = std::fabs((best + 0.5) / m - u_band);
    s.mpae += std::pow(dev, alpha);
  });

  SimReport rep;
  fill_common(rep, cfg, total);
  rep.mean_signal_energy = total.signal_energy / cfg.trials;
  rep.mean_noise_energy = m > 1 ? total.noise_energy / cfg.trials : 0.0;
  rep.empirical_exponent = exponent_of(rep.empirical_error_prob, n);
  double rate = (2.0 / n) * std::log(static_cast<double>(m));
  rep.analytic_reference = std::exp(-(n / 2.0) * decoding_exponent(cfg.snr, rate));
  rep.bound_untestable = rep.analytic_reference * cfg.trials < 10.0;
  return rep;
}

std::vector<std::pair<int, double>> estimate_exponent_sequence(
    const SimConfig& base, const std::vector<int>& n_list, bool replication) {
  if (n_list.empty())
    throw std::domain_error("estimate_exponent_sequence: empty n list");
  if (!std::is_sorted(n_list.begin(), n_list.end()))
    throw std::domain_error("estimate_exponent_sequence: n list must be increasing");
  std::vector<std::pair<int, double>> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    SimConfig cfg = base;
    cfg.n_dim = n;
    SimReport rep = replication
        ? simulate_replication_detector(cfg, 0)
        : simulate_quantize_orthogonal(cfg, 0.5);
    out.emplace_back(n, rep.empirical_exponent);
  }
  return out;
}

std::pair<double, double> wilson_interval(std::int64_t successes,
                                          std::int64_t trials) {
  if (trials < 1 || successes < 0 || successes > trials)
    throw std::domain_error("wilson_interval: need 0 <= successes <= trials");
  const double z = 1.959963984540054;  // two-sided 95%
  const double nd = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / nd;
  const double z2n = z * z / nd;
  const double denom = 1.0 + z2n;
  const double center = ph + 0.5 * z2n;
  const double half = z * std::sqrt((ph * (1.0 - ph) + 0.25 * z2n) / nd);
  // at the boundaries center and half agree analytically; pin the exact
  // endpoint instead of keeping their rounding residue
  double lo = successes == 0 ? 0.0 : (center - half) / denom;
  double hi = successes == trials ? 1.0 : (center + half) / denom;
  return {std::max(0.0, lo), std::min(1.0, hi)};
}

}  // namespace mpae
