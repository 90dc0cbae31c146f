#pragma once

#include "mpae/types.hpp"

namespace mpae {

// Random-coding exponent kernel E0(rho, snr) for the power-constrained AWGN
// channel, evaluated at its optimizing input distribution parameter beta.
// E0(0, snr) == 0 exactly; E0 is nondecreasing and concave in rho.
GallagerEval e0(double rho, double snr);

// Expurgated exponent kernel Ex(rho, snr), rho > 0. Ex(1, g) == E0(1, g)
// and Ex(rho, g) -> g/4 as rho -> infinity. Positively homogeneous of
// degree one: Ex(k rho, k g) = k Ex(rho, g).
GallagerEval ex(double rho, double snr);

// Exponent coefficient gamma_alpha of the unlimited-bandwidth regime,
// piecewise in alpha with branch points alpha0() and 2. At the branch
// points the smaller branch value is taken.
GammaAlphaBound gamma_alpha(double alpha);

// Branch point between the low and middle pieces of gamma_alpha: the root
// of a^3 = 4 in (1, 2), found by bisection.
double alpha0();

// Reliability function of the infinite-bandwidth AWGN channel at rate
// `rate`, capacity `capacity` (both in nats per unit time):
// C/2 - R below C/4, (sqrt(C) - sqrt(R))^2 up to C.
double reliability_unlimited(double rate, double capacity);

}  // namespace mpae
