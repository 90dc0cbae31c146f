// High-snr intercepts, low-snr slopes, critical snr points, and the
// pairwise intercept crossovers of the converses.

#include "mpae/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "mpae/bounds.hpp"
#include "mpae/kernels.hpp"
#include "mpae/optim.hpp"
#include "mpae/replication.hpp"

namespace mpae {

HighSnrConstant high_snr_constant(BoundKind kind, double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw std::domain_error("high_snr_constant: alpha must be > 0");
  HighSnrConstant out;
  out.kind = kind;
  out.alpha = alpha;
  switch (kind) {
    case BoundKind::channel_coding:
      out.value = alpha - (1.0 + alpha) * std::log(1.0 + alpha);
      break;
    case BoundKind::spherical_cap:
      out.value = alpha * (std::log(gamma_alpha(alpha).value / alpha) + 1.0);
      break;
    case BoundKind::spectrum_replication:
      out.value = alpha * (1.0 - std::log(8.0));
      out.valid = alpha >= 2.0;
      break;
    default:
      throw std::domain_error("high_snr_constant: defined for the converse bounds only");
  }
  return out;
}

double verify_high_snr(BoundKind kind, double alpha, double snr) {
  if (!(snr > 0.0))
    throw std::domain_error("verify_high_snr: snr must be > 0");
  HighSnrConstant c = high_snr_constant(kind, alpha);
  if (!c.valid)
    throw std::domain_error("verify_high_snr: intercept not valid at this alpha");
  return bound_value(kind, alpha, snr) - alpha * std::log(snr) - c.value;
}

double low_snr_slope(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw std::domain_error("low_snr_slope: alpha must be > 0");
  return alpha / (2.0 * (1.0 + alpha));
}

CriticalSnr critical_snr(BoundKind kind, double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw std::domain_error("critical_snr: alpha must be > 0");
  CriticalSnr out;
  out.kind = kind;
  out.alpha = alpha;
  const double ga = gamma_alpha(alpha).value;

  if (kind == BoundKind::spherical_cap) {
    // closed form: the log branch takes over where gamma snr = alpha
    out.snr = alpha / ga;
    out.bracket_lo = out.bracket_hi = out.snr;
    return out;
  }

  std::function<double(double)> f;
  if (kind == BoundKind::channel_coding) {
    // positive while the coding term still dominates the line
    f = [alpha, ga](double g) { return 2.0 * e0(alpha, g).value - ga * g; };
  } else if (kind == BoundKind::spectrum_replication) {
    // positive while the replication correction is inactive
    f = [alpha](double g) { return -lambda_alpha(alpha, g); };
  } else {
    throw std::domain_error("critical_snr: defined for the converse bounds only");
  }

  double lo = 1.0;
  double hi = 2.0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9)
      throw std::runtime_error("critical_snr: no crossing found below snr 1e9");
  }
  while (f(lo) <= 0.0) {
    hi = lo;
    lo *= 0.5;
    if (lo < 1e-6)
      throw std::runtime_error("critical_snr: no positive region above snr 1e-6");
  }
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.f_lo = f(lo);
  out.f_hi = f(hi);
  out.snr = find_root(f, lo, hi, 1e-9 * (hi > 1.0 ? hi : 1.0));
  return out;
}

std::vector<Crossover> constant_crossovers() {
  auto diff = [](BoundKind a, BoundKind b) {
    return [a, b](double x) {
      return high_snr_constant(a, x).value - high_snr_constant(b, x).value;
    };
  };
  std::vector<Crossover> out;

  Crossover cs;
  cs.first = BoundKind::channel_coding;
  cs.second = BoundKind::spherical_cap;
  cs.alpha = find_root(diff(cs.first, cs.second), 1.05, 1.8, 1e-12);
  out.push_back(cs);

  Crossover ss;
  ss.first = BoundKind::spherical_cap;
  ss.second = BoundKind::spectrum_replication;
  // equal intercepts iff gamma_alpha / alpha = 1/8, i.e. 2(1+alpha) = 8
  ss.alpha = 3.0;
  ss.analytic = true;
  out.push_back(ss);

  Crossover cr;
  cr.first = BoundKind::channel_coding;
  cr.second = BoundKind::spectrum_replication;
  cr.alpha = find_root(diff(cr.first, cr.second), 3.2, 6.0, 1e-12);
  out.push_back(cr);

  return out;
}

}  // namespace mpae
