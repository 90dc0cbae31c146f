#pragma once

#include "mpae/types.hpp"

namespace mpae {

// Large-N exponent of P(chi2_N / N >= eta) for a central chi-square:
// (eta - 1 - log eta)/2 for eta >= 1, zero below the mean.
double chi2_upper_exponent(double eta);

// Large-N exponent of P(chi2_N(lambda) / N <= eta) for a noncentral
// chi-square with per-dimension noncentrality snr: zero for eta >= 1 + snr.
double noncentral_lower_exponent(double eta, double snr);

// Both tail exponents at one threshold.
ChiSquareExponents chi2_exponents(double eta, double snr);

// Minimizing threshold of the union-bound exponent
// g(eta) = 2 rho chi2_upper(eta) + 2 noncentral_lower(eta, snr)
// over eta >= 1; always lands in [1, 1 + snr).
double eta_star(double rho, double snr);

// Phi(rho, snr) = g(eta_star): exponent of the per-trial union bound at
// list parameter rho. Phi(0, snr) = 0 by continuity.
ReplicationEval phi(double rho, double snr);

// Decoding error exponent at rate R: G(snr, R) = max_{rho in [0,1]}
// { Phi(rho, snr) - rho R }, nonnegative.
double decoding_exponent(double snr, double rate);

// Lambda_alpha(snr) = sup_{rho in (0, 1]} ( Phi(rho, snr) - gamma_alpha snr ) / rho.
// The objective diverges to -inf as rho -> 0, so the sup is attained on the
// interior or at rho = 1; the scan floor is rho = 1e-6.
double lambda_alpha(double alpha, double snr);

}  // namespace mpae
