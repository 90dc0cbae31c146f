#pragma once

#include "mpae/types.hpp"

namespace mpae {

// Bounds on the mean power-alpha error exponent F_alpha(snr), defined by
// MPaE ~ exp(-(N/2) F_alpha), N = 2WT. All are per-snr curves in nats.

// Data-processing converse: alpha log(1 + snr).
double dpt_bound(double alpha, double snr);

// Channel-coding converse: min{ 2 E0(alpha, snr), gamma_alpha snr }.
double channel_coding_converse(double alpha, double snr);

// Spherical-cap converse: gamma_alpha snr below alpha/gamma_alpha, then
// alpha (log(gamma_alpha snr / alpha) + 1).
double spherical_cap_bound(double alpha, double snr);

// Spectrum-replication converse: gamma_alpha snr - max{alpha Lambda_alpha, 0}.
double spectrum_replication_bound(double alpha, double snr);

// Unlimited-bandwidth exponent gamma_alpha * snr (upper envelope).
double unlimited_bound(double alpha, double snr);

// Orthogonal-signaling achievability:
// 2 max{ sup_{rho in [0,1]} alpha E0 / (rho + alpha),
//        sup_{rho >= 1}    alpha Ex / (rho + alpha) },
// the expurgated sup taken over an adaptively enlarged rho range.
double achievability_bound(double alpha, double snr);

// Fraction of the unit sphere surface in n_dim dimensions covered by a cap
// of half-angle theta, by quadrature of sin^(n-2).
double cap_area_ratio(int n_dim, double theta);

// Large-n closed-form approximation to the same ratio (theta < pi/2):
// sin^n(theta) / ( sqrt(2 pi n) sin(theta) cos(theta) ).
double cap_area_ratio_asymptotic(int n_dim, double theta);

// Dispatch by kind (dpt, converses, unlimited, achievability).
double bound_value(BoundKind kind, double alpha, double snr);

}  // namespace mpae
