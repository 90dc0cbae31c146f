#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "mpae/types.hpp"

namespace mpae {

// Maximize f on [lo, hi]: coarse grid to bracket, then golden-section to
// arg_tol. The objectives in this library are unimodal up to flat shoulders;
// the grid guards against refining the wrong shoulder.
OptScalarResult maximize_scalar(const std::function<double(double)>& f,
                                double lo, double hi,
                                int grid_points = 256, double arg_tol = 1e-9);

// Bisection root of f on [lo, hi]; throws std::domain_error without a sign
// change. tol is absolute on the argument.
double find_root(const std::function<double(double)>& f,
                 double lo, double hi, double tol = 1e-12);

// Real roots of a x^2 + b x + c = 0 as (smaller, larger), computed in the
// cancellation-free form. nullopt when degenerate or complex.
std::optional<std::pair<double, double>> solve_quadratic(double a, double b, double c);

// Adaptive Simpson quadrature; rel_tol is relative to a coarse estimate of
// the integral magnitude.
double integrate_adaptive(const std::function<double(double)>& f,
                          double lo, double hi, double rel_tol = 1e-10);

}  // namespace mpae
