// The per-snr exponent bounds themselves.

#include "mpae/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mpae/kernels.hpp"
#include "mpae/optim.hpp"
#include "mpae/replication.hpp"

namespace mpae {

namespace {

void check_args(double alpha, double snr) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw std::domain_error("bounds: alpha must be finite and > 0");
  if (!std::isfinite(snr) || snr < 0.0)
    throw std::domain_error("bounds: snr must be finite and >= 0");
}

}  // namespace

double dpt_bound(double alpha, double snr) {
  check_args(alpha, snr);
  return alpha * std::log1p(snr);
}

double unlimited_bound(double alpha, double snr) {
  check_args(alpha, snr);
  return gamma_alpha(alpha).value * snr;
}

double channel_coding_converse(double alpha, double snr) {
  check_args(alpha, snr);
  double coding = 2.0 * e0(alpha, snr).value;
  double line = unlimited_bound(alpha, snr);
  return coding < line ? coding : line;
}

double spherical_cap_bound(double alpha, double snr) {
  check_args(alpha, snr);
  double ga = gamma_alpha(alpha).value;
  if (ga * snr <= alpha) return ga * snr;
  return alpha * (std::log(ga * snr / alpha) + 1.0);
}

double spectrum_replication_bound(double alpha, double snr) {
  check_args(alpha, snr);
  if (snr == 0.0) return 0.0;
  double cut = alpha * lambda_alpha(alpha, snr);
  double line = unlimited_bound(alpha, snr);
  return cut > 0.0 ? line - cut : line;
}

double achievability_bound(double alpha, double snr) {
  check_args(alpha, snr);
  if (snr == 0.0) return 0.0;
  auto random_part = [alpha, snr](double rho) {
    return alpha * e0(rho, snr).value / (rho + alpha);
  };
  OptScalarResult r0 = maximize_scalar(random_part, 0.0, 1.0, 192, 1e-9);
  auto expurgated_part = [alpha, snr](double rho) {
    return alpha * ex(rho, snr).value / (rho + alpha);
  };
  // enlarge the rho range until the maximizer detaches from the cap
  double cap = 2.0;
  OptScalarResult rx = maximize_scalar(expurgated_part, 1.0, cap, 192, 1e-9);
  while (rx.argopt > 0.99 * cap && cap < 1e12) {
    cap *= 2.0;
    rx = maximize_scalar(expurgated_part, 1.0, cap, 192, 1e-9);
  }
  double inner = r0.value > rx.value ? r0.value : rx.value;
  return 2.0 * inner;
}

double cap_area_ratio(int n_dim, double theta) {
  if (n_dim < 2) throw std::domain_error("cap_area_ratio: n_dim must be >= 2");
  if (!(theta > 0.0) || theta > std::numbers::pi)
    throw std::domain_error("cap_area_ratio: theta must lie in (0, pi]");
  auto integrand = [n_dim](double t) {
    double s = std::sin(t);
    return s <= 0.0 ? 0.0 : std::exp((n_dim - 2) * std::log(s));
  };
  double num = integrate_adaptive(integrand, 0.0, theta, 1e-11);
  double den = integrate_adaptive(integrand, 0.0, std::numbers::pi, 1e-11);
  return num / den;
}

double cap_area_ratio_asymptotic(int n_dim, double theta) {
  if (n_dim < 2) throw std::domain_error("cap_area_ratio_asymptotic: n_dim must be >= 2");
  if (!(theta > 0.0) || theta >= 0.5 * std::numbers::pi)
    throw std::domain_error("cap_area_ratio_asymptotic: theta must lie in (0, pi/2)");
  double n = n_dim;
  double s = std::sin(theta);
  return std::exp(n * std::log(s)) /
         (std::sqrt(2.0 * std::numbers::pi * n) * s * std::cos(theta));
}

double bound_value(BoundKind kind, double alpha, double snr) {
  switch (kind) {
    case BoundKind::dpt: return dpt_bound(alpha, snr);
    case BoundKind::channel_coding: return channel_coding_converse(alpha, snr);
    case BoundKind::spherical_cap: return spherical_cap_bound(alpha, snr);
    case BoundKind::spectrum_replication: return spectrum_replication_bound(alpha, snr);
    case BoundKind::unlimited: return unlimited_bound(alpha, snr);
    case BoundKind::achievability: return achievability_bound(alpha, snr);
  }
  throw std::domain_error("bound_value: unknown kind");
}

}  // namespace mpae
