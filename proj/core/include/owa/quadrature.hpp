#ifndef OWA_QUADRATURE_HPP
#define OWA_QUADRATURE_HPP

#include <functional>
#include <span>

namespace owa {

/// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance
/// abs_tol and recursion depth capped at max_depth. Uses the standard
/// Richardson error estimate |S2 - S1| / 15 and returns the corrected sum.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 30);

/// Integrates f over [a, b] split at the given interior breakpoints, so each
/// panel sees a smooth integrand. rel_tol is relative to max(1, |estimate|);
/// breakpoints outside (a, b) are ignored.
double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints, double rel_tol,
                           int max_depth = 30);

} // namespace owa

#endif // OWA_QUADRATURE_HPP
