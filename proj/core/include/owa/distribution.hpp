#ifndef OWA_DISTRIBUTION_HPP
#define OWA_DISTRIBUTION_HPP

#include <span>
#include <vector>

#include "owa/instance.hpp"

namespace owa {

/// Largest number of non-degenerate selected items the exact CDF/VaR path
/// accepts. The inclusion-exclusion sum has up to 2^m terms and loses
/// roughly a digit of absolute accuracy per doubling; at m = 18 the error
/// stays below ~1e-9 for two-digit interval widths. Beyond this, use
/// Monte Carlo.
inline constexpr int kExactLimit = 18;

/// Distribution of c^T x when each selected cost is independently uniform
/// on its interval: a shifted sum of uniform [0, width] variables (a scaled
/// Irwin-Hall distribution) plus a deterministic part. Immutable.
class CostDistribution {
public:
    /// Sum of lower bounds of the selected non-degenerate items.
    double shift() const { return shift_; }
    /// Sum of the selected degenerate (deterministic) costs.
    double const_total() const { return const_total_; }
    /// Widths hi - lo of the selected non-degenerate items, ascending item order.
    std::span<const double> widths() const { return widths_; }

    int m() const { return static_cast<int>(widths_.size()); }
    bool point_mass() const { return widths_.empty(); }

    double lower() const { return shift_ + const_total_; }
    double upper() const { return lower() + width_sum_; }

private:
    friend CostDistribution build_distribution(const IntervalInstance&, const Solution&);
    friend double exact_cdf(const CostDistribution&, double);

    // One grouped inclusion-exclusion term: signed binomial coefficient and
    // the subset width sum it subtracts from s.
    struct Term {
        double offset;
        double coeff;
    };

    double shift_ = 0.0;
    double const_total_ = 0.0;
    double width_sum_ = 0.0;
    std::vector<double> widths_;
    std::vector<Term> terms_; // sorted by offset; built eagerly for m <= kExactLimit
    double denom_ = 1.0;      // m! * product of widths
};

/// Distribution of sum_i c_i x_i. Degenerate selected items contribute to
/// const_total only; an empty selection yields the point mass at 0.
CostDistribution build_distribution(const IntervalInstance& instance, const Solution& x);

/// P(c^T x <= y), exact: piecewise-polynomial box-volume formula with equal
/// widths grouped into binomial multiplicities and compensated summation.
/// Throws CapabilityError when m exceeds kExactLimit.
double exact_cdf(const CostDistribution& dist, double y);

/// The t-quantile inf{y : F(y) >= t}. t = 0 returns the lower support bound
/// (essential infimum); point masses return the point; otherwise bisection
/// on [lower, upper] to absolute tolerance 1e-10 * max(1, upper - lower).
double exact_var(const CostDistribution& dist, double t);

} // namespace owa

#endif // OWA_DISTRIBUTION_HPP
