// Scalar optimization, root finding, and quadrature primitives. Every
// nested optimization in the bounds decomposes into these.

#include "mpae/optim.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mpae {

OptScalarResult maximize_scalar(const std::function<double(double)>& f,
                                double lo, double hi,
                                int grid_points, double arg_tol) {
  if (!(lo < hi)) throw std::domain_error("maximize_scalar: empty interval");
  if (grid_points < 3) grid_points = 3;

  OptScalarResult res;
  res.tolerance_used = arg_tol;

  std::vector<double> xs(grid_points);
  int best = 0;
  double best_val = -HUGE_VAL;
  for (int i = 0; i < grid_points; ++i) {
    double x = lo + (hi - lo) * i / (grid_points - 1);
    xs[i] = x;
    double v = f(x);
    ++res.evaluations;
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  double a = xs[best > 0 ? best - 1 : 0];
  double b = xs[best + 1 < grid_points ? best + 1 : grid_points - 1];

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  res.evaluations += 2;
  while (b - a > arg_tol && res.evaluations < 100000) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++res.evaluations;
  }
  res.converged = (b - a) <= arg_tol;
  res.argopt = 0.5 * (a + b);
  res.value = f(res.argopt);
  ++res.evaluations;
  if (best_val > res.value) {
    // grid point sat exactly on a kink or plateau edge
    res.argopt = xs[best];
    res.value = best_val;
  }
  return res;
}

double find_root(const std::function<double(double)>& f,
                 double lo, double hi, double tol) {
  if (!(lo <= hi)) throw std::domain_error("find_root: empty interval");
  double fa = f(lo);
  double fb = f(hi);
  if (fa == 0.0) return lo;
  if (fb == 0.0) return hi;
  if ((fa > 0.0) == (fb > 0.0))
    throw std::domain_error("find_root: no sign change on bracket");
  while (hi - lo > tol) {
    double m = 0.5 * (lo + hi);
    if (m <= lo || m >= hi) break;  // interval below fp resolution
    double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      lo = m;
      fa = fm;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<std::pair<double, double>> solve_quadratic(double a, double b, double c) {
  if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    return std::nullopt;
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;
  double s = std::sqrt(disc);
  // q = -(b + sign(b) sqrt(disc))/2 keeps the larger-magnitude sum
  double q = -0.5 * (b + std::copysign(s, b));
  double r1, r2;
  if (q != 0.0) {
    r1 = q / a;
    r2 = c / q;
  } else {
    r1 = 0.0;  // b == 0 and disc == 0: double root at zero
    r2 = 0.0;
  }
  if (r1 > r2) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

namespace {

double simpson(double h, double fa, double fm, double fb) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double m,
             double b, double fa, double fm, double fb, double whole,
             double tol, int depth) {
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = simpson(m - a, fa, flm, fm);
  double right = simpson(b - m, fm, frm, fb);
  double diff = left + right - whole;
  if (depth <= 0 || std::fabs(diff) <= 15.0 * tol)
    return left + right + diff / 15.0;
  return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f,
                          double lo, double hi, double rel_tol) {
  if (lo == hi) return 0.0;
  if (!(lo < hi)) throw std::domain_error("integrate_adaptive: reversed interval");
  // midpoint presum fixes the magnitude the relative tolerance refers to
  const int n = 64;
  double h = (hi - lo) / n;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += f(lo + (i + 0.5) * h);
  double scale = std::fabs(acc) * h;
  double tol = rel_tol * (scale > 1e-300 ? scale : 1e-300);
  double m = 0.5 * (lo + hi);
  double fa = f(lo);
  double fm = f(m);
  double fb = f(hi);
  double whole = simpson(hi - lo, fa, fm, fb);
  return adapt(f, lo, m, hi, fa, fm, fb, whole, tol, 60);
}

}  // namespace mpae
