#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mpae/types.hpp"

namespace mpae {

// Monte Carlo probes of the two operational schemes. Both are bitwise
// deterministic for a fixed (config, seed) regardless of thread count:
// trials are split into fixed 4096-trial batches, each batch owns a
// counter-seeded generator, and partial sums are reduced in batch order.

// Uniform-quantization + orthogonal signaling: the parameter u in [0, 1)
// picks one of num_levels cells, the cell index is sent with one of M
// orthogonal signals of energy N snr, the decoder takes the coordinate
// argmax and estimates the cell midpoint. Reports the empirical mean
// |u_hat - u|^alpha and the cell error rate; analytic_reference is the
// exact M-ary orthogonal error probability by quadrature.
SimReport simulate_quantize_orthogonal(const SimConfig& cfg, double u_true);

// Band-position detector: the true band carries mean energy N (1 + snr),
// the other num_levels - 1 bands pure noise; the detector picks the
// maximum-energy band. Reports the band error rate (headline exponent)
// and the mean power-alpha error of the induced position estimate
// u_hat = (band + 0.5) / M; analytic_reference is the Chernoff-style bound
// exp(-(N/2) G(snr, R)) at rate R = (2/N) log M.
SimReport simulate_replication_detector(const SimConfig& cfg, int band_true);

// Empirical exponent -(2/N) log(error rate) across increasing N at fixed
// snr and num_levels, replication detector by default.
std::vector<std::pair<int, double>> estimate_exponent_sequence(
    const SimConfig& base, const std::vector<int>& n_list,
    bool replication = true);

// 95% Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::int64_t successes,
                                          std::int64_t trials);

}  // namespace mpae
