#include "owa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace owa {

namespace {

double simpson(double h, double fa, double fm, double fb) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

double simpson_recurse(const std::function<double(double)>& f, double a, double m, double b,
                       double fa, double fm, double fb, double whole, double abs_tol,
                       int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(m - a, fa, flm, fm);
    const double right = simpson(b - m, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * abs_tol) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1) +
           simpson_recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (a == b) {
        return 0.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(b - a, fa, fm, fb);
    return simpson_recurse(f, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints, double rel_tol,
                           int max_depth) {
    std::vector<double> edges;
    edges.push_back(a);
    for (double t : breakpoints) {
        if (t > a && t < b) {
            edges.push_back(t);
        }
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    // Coarse pass to set the absolute budget, then one refined pass per panel
    // with the budget split by panel width.
    double coarse = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i];
        const double hi = edges[i + 1];
        coarse += simpson(hi - lo, f(lo), f(0.5 * (lo + hi)), f(hi));
    }
    const double abs_tol = rel_tol * std::max(1.0, std::abs(coarse));

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i];
        const double hi = edges[i + 1];
        const double share = abs_tol * (hi - lo) / (b - a);
        total += adaptive_simpson(f, lo, hi, share, max_depth);
    }
    return total;
}

} // namespace owa
