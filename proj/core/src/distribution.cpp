#include "owa/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "owa/errors.hpp"

namespace owa {

namespace {

double ipow(double base, int exp) {
    double result = 1.0;
    while (exp > 0) {
        if (exp & 1) {
            result *= base;
        }
        base *= base;
        exp >>= 1;
    }
    return result;
}

void check_exact_capability(const CostDistribution& dist) {
    if (dist.m() > kExactLimit) {
        std::ostringstream msg;
        msg << "exact evaluation supports at most " << kExactLimit
            << " non-degenerate selected items (got " << dist.m()
            << "); use the Monte Carlo evaluator instead";
        throw CapabilityError(msg.str());
    }
}

} // namespace

CostDistribution build_distribution(const IntervalInstance& instance, const Solution& x) {
    if (static_cast<int>(x.size()) != instance.n()) {
        throw DimensionError("solution length does not match instance size");
    }

    CostDistribution dist;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x.selected(i)) {
            continue;
        }
        const Interval& item = instance.items[i];
        if (item.degenerate()) {
            dist.const_total_ += item.lo;
        } else {
            dist.shift_ += item.lo;
            dist.widths_.push_back(item.width());
            dist.width_sum_ += item.width();
        }
    }

    const int m = dist.m();
    if (m == 0 || m > kExactLimit) {
        return dist; // no exact-CDF table: point mass or Monte-Carlo-only
    }

    // Group equal widths: subsets of equal widths collapse to binomial
    // multiplicities, shrinking 2^m terms to prod(mult_g + 1).
    std::map<double, int> groups;
    for (double w : dist.widths_) {
        ++groups[w];
    }

    // Pascal rows up to the largest multiplicity.
    std::vector<std::vector<double>> binomial(static_cast<std::size_t>(m) + 1);
    for (int r = 0; r <= m; ++r) {
        auto& row = binomial[static_cast<std::size_t>(r)];
        row.assign(static_cast<std::size_t>(r) + 1, 1.0);
        for (int c = 1; c < r; ++c) {
            row[static_cast<std::size_t>(c)] =
                binomial[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] +
                binomial[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)];
        }
    }

    const std::vector<std::pair<double, int>> grouped(groups.begin(), groups.end());
    std::vector<int> index(grouped.size(), 0);
    while (true) {
        double offset = 0.0;
        double coeff = 1.0;
        int picks = 0;
        for (std::size_t g = 0; g < grouped.size(); ++g) {
            const int j = index[g];
            offset += j * grouped[g].first;
            coeff *= binomial[static_cast<std::size_t>(grouped[g].second)][static_cast<std::size_t>(j)];
            picks += j;
        }
        dist.terms_.push_back({offset, (picks % 2 == 0) ? coeff : -coeff});

        std::size_t g = 0;
        while (g < index.size() && index[g] == grouped[g].second) {
            index[g] = 0;
            ++g;
        }
        if (g == index.size()) {
            break;
        }
        ++index[g];
    }
    std::sort(dist.terms_.begin(), dist.terms_.end(),
              [](const auto& a, const auto& b) { return a.offset < b.offset; });

    dist.denom_ = 1.0;
    for (int k = 1; k <= m; ++k) {
        dist.denom_ *= k;
    }
    for (double w : dist.widths_) {
        dist.denom_ *= w;
    }
    return dist;
}

double exact_cdf(const CostDistribution& dist, double y) {
    if (dist.point_mass()) {
        return y >= dist.lower() ? 1.0 : 0.0;
    }
    check_exact_capability(dist);

    const double s = y - dist.lower();
    if (s <= 0.0) {
        return 0.0;
    }
    if (s >= dist.width_sum_) {
        return 1.0;
    }

    const int m = dist.m();
    double sum = 0.0;
    double carry = 0.0; // Kahan: the alternating terms cancel heavily
    for (const auto& term : dist.terms_) {
        if (term.offset >= s) {
            break; // terms are sorted; the rest clamp to zero
        }
        const double v = term.coeff * ipow(s - term.offset, m);
        const double t = sum + (v - carry);
        carry = (t - sum) - (v - carry);
        sum = t;
    }
    return std::clamp(sum / dist.denom_, 0.0, 1.0);
}

double exact_var(const CostDistribution& dist, double t) {
    if (!(t >= 0.0) || !(t <= 1.0)) {
        throw ParameterError("quantile level t must lie in [0, 1]");
    }
    if (dist.point_mass()) {
        return dist.lower();
    }
    check_exact_capability(dist);

    if (t <= 0.0) {
        return dist.lower();
    }
    if (t >= 1.0) {
        return dist.upper();
    }

    double lo = dist.lower();
    double hi = dist.upper();
    const double tol = 1e-10 * std::max(1.0, hi - lo);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (exact_cdf(dist, mid) >= t) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace owa
