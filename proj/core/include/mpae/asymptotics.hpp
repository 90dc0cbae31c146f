#pragma once

#include <vector>

#include "mpae/types.hpp"

namespace mpae {

// High-snr intercept c_alpha with bound = alpha log snr + c_alpha + o(1).
// Defined for the three nontrivial converses; spectrum_replication is only
// valid for alpha >= 2 (flagged, value still returned).
HighSnrConstant high_snr_constant(BoundKind kind, double alpha);

// Residual bound(alpha, snr) - alpha log snr - c_alpha at finite snr.
double verify_high_snr(BoundKind kind, double alpha, double snr);

// Low-snr slope of the achievable exponent per snr for alpha >= 1:
// alpha / (2 (1 + alpha)).
double low_snr_slope(double alpha);

// First snr at which a converse departs from the gamma_alpha snr line
// (channel_coding, spectrum_replication: bracketed bisection with verified
// sign change; spherical_cap: closed form alpha/gamma_alpha).
CriticalSnr critical_snr(BoundKind kind, double alpha);

// Pairwise equal-intercept points of the three converses over alpha.
// The cap/replication pair is analytic: gamma_alpha / alpha = 1/8 at
// alpha = 3 exactly.
std::vector<Crossover> constant_crossovers();

}  // namespace mpae
