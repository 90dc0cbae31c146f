// Exponent kernels of the power-constrained AWGN channel and the exponent
// coefficient of the unlimited-bandwidth regime.

#include "mpae/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "mpae/optim.hpp"

namespace mpae {

namespace {

void check_nonneg(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error(std::string("kernels: ") + what + " must be finite and >= 0");
}

}  // namespace

GallagerEval e0(double rho, double snr) {
  check_nonneg(rho, "rho");
  check_nonneg(snr, "snr");
  const double g = snr;
  const double c = g / (1.0 + rho);
  const double d = 4.0 * g * rho / ((1.0 + rho + g) * (1.0 + rho + g));
  const double s = std::sqrt(1.0 - d);  // d <= 1 by AM-GM, s real
  // beta = (1 + c)(1 + s)/2; carry beta - 1 to avoid cancellation at low snr
  const double b1 = 0.5 * (c * (1.0 + s) - d / (1.0 + s));
  GallagerEval ev;
  ev.rho = rho;
  ev.snr = snr;
  ev.beta = 1.0 + b1;
  // g - (1+rho) b1 and b1 - c both pit O(g) terms against each other while
  // the true differences stay O(rho); 1 - s = d/(1+s) turns each into a
  // cancellation-free product, exact for all g
  const double lin = 2.0 * g * rho / ((1.0 + rho + g) * (1.0 + s));
  const double b1_minus_c = -d * (1.0 + c) / (2.0 * (1.0 + s));
  ev.value = 0.5 * (lin + std::log1p(b1_minus_c) + rho * std::log1p(b1));
  return ev;
}

GallagerEval ex(double rho, double snr) {
  check_nonneg(snr, "snr");
  if (!std::isfinite(rho) || rho <= 0.0)
    throw std::domain_error("kernels: rho must be finite and > 0");
  const double h = snr / (2.0 * rho);
  const double r = std::hypot(1.0, h);
  const double rm1 = h * h / (1.0 + r);  // r - 1 without cancellation
  GallagerEval ev;
  ev.rho = rho;
  ev.snr = snr;
  ev.beta = 0.5 * (1.0 + h + r);
  // exact rearrangement of (1 - beta) rho + snr/2 + (rho/2) log(beta (beta - h)):
  // beta (beta - h) == (1 + r)/2, and the linear part collapses to the
  // product form below, positive all the way down to snr -> 0
  ev.value = 0.25 * snr * (1.0 + 1.0 / (r + h)) / (1.0 + r) +
             0.5 * rho * std::log1p(0.5 * rm1);
  return ev;
}

namespace {

// psi(alpha) = 1 + alpha - max_{q in [1/2, 1]} of this objective
double psi_objective(double q, double alpha) {
  double rad = (1.0 - q) * q * (1.0 + alpha);
  if (rad < 0.0) rad = 0.0;
  return 2.0 * alpha * q + 4.0 * q * std::sqrt(rad) - q * q * (3.0 * alpha + 1.0);
}

double psi_of_alpha(double alpha) {
  auto obj = [alpha](double q) { return psi_objective(q, alpha); };
  OptScalarResult r = maximize_scalar(obj, 0.5, 1.0, 1001, 1e-10);
  return 1.0 + alpha - r.value;
}

double low_branch(double alpha) {
  double p = psi_of_alpha(alpha);
  return (alpha < p ? alpha : p) / (1.0 + alpha);
}

double middle_branch(double alpha) {
  return alpha / (2.0 * (1.0 + alpha)) *
         (1.0 + (alpha + 5.0 - 4.0 * std::sqrt(alpha + 1.0)) / (3.0 * alpha + 1.0));
}

double high_branch(double alpha) { return alpha / (2.0 * (1.0 + alpha)); }

}  // namespace

double alpha0() {
  static const double root =
      find_root([](double a) { return a * a * a - 4.0; }, 1.0, 2.0, 1e-13);
  return root;
}

GammaAlphaBound gamma_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw std::domain_error("gamma_alpha: alpha must be finite and > 0");
  const double a0 = alpha0();
  GammaAlphaBound out;
  out.alpha = alpha;
  if (alpha < a0) {
    out.value = low_branch(alpha);
    out.branch = GammaBranch::low;
  } else if (alpha == a0) {
    // at the seam take the smaller branch (the pieces do not meet)
    double lo = low_branch(alpha);
    double mi = middle_branch(alpha);
    out.value = mi <= lo ? mi : lo;
    out.branch = mi <= lo ? GammaBranch::middle : GammaBranch::low;
  } else if (alpha < 2.0) {
    out.value = middle_branch(alpha);
    out.branch = GammaBranch::middle;
  } else if (alpha == 2.0) {
    double mi = middle_branch(alpha);
    double hi = high_branch(alpha);
    out.value = hi <= mi ? hi : mi;
    out.branch = hi <= mi ? GammaBranch::high : GammaBranch::middle;
  } else {
    out.value = high_branch(alpha);
    out.branch = GammaBranch::high;
  }
  return out;
}

double reliability_unlimited(double rate, double capacity) {
  if (!std::isfinite(capacity) || capacity <= 0.0)
    throw std::domain_error("reliability_unlimited: capacity must be > 0");
  if (!std::isfinite(rate) || rate < 0.0 || rate > capacity)
    throw std::domain_error("reliability_unlimited: rate must lie in [0, capacity]");
  if (rate <= 0.25 * capacity) return 0.5 * capacity - rate;
  double d = std::sqrt(capacity) - std::sqrt(rate);
  return d * d;
}

}  // namespace mpae
