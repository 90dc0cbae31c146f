// Chi-square tail exponents and the replication decoding exponent built
// from them.

#include "mpae/replication.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mpae/kernels.hpp"
#include "mpae/optim.hpp"

namespace mpae {

double chi2_upper_exponent(double eta) {
  if (!std::isfinite(eta) || eta <= 0.0)
    throw std::domain_error("chi2_upper_exponent: eta must be > 0");
  if (eta <= 1.0) return 0.0;  // at or below the mean: no decay
  return 0.5 * (eta - 1.0 - std::log(eta));
}

double noncentral_lower_exponent(double eta, double snr) {
  if (!std::isfinite(eta) || eta <= 0.0)
    throw std::domain_error("noncentral_lower_exponent: eta must be > 0");
  if (!std::isfinite(snr) || snr < 0.0)
    throw std::domain_error("noncentral_lower_exponent: snr must be >= 0");
  if (eta >= 1.0 + snr) return 0.0;  // threshold at or above the mean
  double w = std::sqrt(4.0 * eta * snr + 1.0);
  return 0.5 * (eta + snr + std::log((w + 1.0) / (2.0 * eta)) - w);
}

ChiSquareExponents chi2_exponents(double eta, double snr) {
  ChiSquareExponents out;
  out.eta = eta;
  out.snr = snr;
  out.central_upper = chi2_upper_exponent(eta);
  out.noncentral_lower = noncentral_lower_exponent(eta, snr);
  return out;
}

namespace {

// g(eta) = 2 rho chi2_upper + 2 noncentral_lower, written out so the
// optimizer sees one smooth expression on [1, 1 + snr)
double g_objective(double eta, double rho, double snr) {
  double w = std::sqrt(4.0 * eta * snr + 1.0);
  return rho * (eta - 1.0 - std::log(eta)) + eta + snr +
         std::log((w + 1.0) / (2.0 * eta)) - w;
}

}  // namespace

double eta_star(double rho, double snr) {
  if (!std::isfinite(rho) || rho <= 0.0)
    throw std::domain_error("eta_star: rho must be > 0");
  if (!std::isfinite(snr) || snr <= 0.0)
    throw std::domain_error("eta_star: snr must be > 0");
  // g is convex here and its minimizer sits in [1, 1 + snr); the upper end
  // 10 max(1, snr) leaves slack for the coarse grid
  double hi = 10.0 * (snr > 1.0 ? snr : 1.0);
  auto neg = [rho, snr](double e) { return -g_objective(e, rho, snr); };
  OptScalarResult r = maximize_scalar(neg, 1.0, hi, 128, 1e-9);
  return r.argopt;
}

ReplicationEval phi(double rho, double snr) {
  if (!std::isfinite(rho) || rho < 0.0)
    throw std::domain_error("phi: rho must be >= 0");
  if (!std::isfinite(snr) || snr < 0.0)
    throw std::domain_error("phi: snr must be >= 0");
  ReplicationEval ev;
  ev.rho = rho;
  ev.snr = snr;
  if (rho == 0.0 || snr == 0.0) {
    // continuity limit: the minimizing threshold drifts to the noncentral
    // mean and both tail exponents vanish
    ev.eta_star = 1.0 + snr;
    ev.value = 0.0;
    return ev;
  }
  ev.eta_star = eta_star(rho, snr);
  ev.value = g_objective(ev.eta_star, rho, snr);
  return ev;
}

double decoding_exponent(double snr, double rate) {
  if (!std::isfinite(snr) || snr < 0.0)
    throw std::domain_error("decoding_exponent: snr must be >= 0");
  if (!std::isfinite(rate) || rate < 0.0)
    throw std::domain_error("decoding_exponent: rate must be >= 0");
  if (snr == 0.0) return 0.0;
  auto obj = [snr, rate](double rho) {
    return (rho > 0.0 ? phi(rho, snr).value : 0.0) - rho * rate;
  };
  OptScalarResult r = maximize_scalar(obj, 0.0, 1.0, 128, 1e-9);
  return r.value > 0.0 ? r.value : 0.0;
}

double lambda_alpha(double alpha, double snr) {
  if (!std::isfinite(snr) || snr <= 0.0)
    throw std::domain_error("lambda_alpha: snr must be > 0");
  const double ga = gamma_alpha(alpha).value;
  auto obj = [ga, snr](double rho) {
    return (phi(rho, snr).value - ga * snr) / rho;
  };
  // log-spaced scan: the objective falls to -inf as rho -> 0, so the sup
  // lives well above the 1e-6 floor; refine around the best grid point
  const int n = 128;
  std::vector<double> xs(n);
  int best = 0;
  double best_v = -HUGE_VAL;
  for (int i = 0; i < n; ++i) {
    xs[i] = std::pow(10.0, -6.0 + 6.0 * i / (n - 1));
    double v = obj(xs[i]);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  double lo = xs[best > 0 ? best - 1 : 0];
  double hi = xs[best + 1 < n ? best + 1 : n - 1];
  OptScalarResult r = maximize_scalar(obj, lo, hi, 24, 1e-10);
  return r.value > best_v ? r.value : best_v;
}

}  // namespace mpae
