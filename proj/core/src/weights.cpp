#include "owa/weights.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <utility>

#include "owa/errors.hpp"
#include "owa/quadrature.hpp"
#include "format.hpp"

namespace owa {

namespace {

double clamp01(double t) {
    return std::clamp(t, 0.0, 1.0);
}

void check_normalized(const WeightDensity& w, double tol) {
    const double mass = w.cumulative(1.0) - w.cumulative(0.0);
    if (std::abs(mass - 1.0) > tol) {
        std::ostringstream msg;
        msg << "weight density is not normalized: integral is " << mass;
        throw ParameterError(msg.str());
    }
}

// Cumulative table for custom densities without a closed-form antiderivative.
// The grid is integrated cell by cell at construction; between grid points the
// remainder is integrated on demand, which keeps evaluation pure.
class CachedAntiderivative {
public:
    CachedAntiderivative(std::function<double(double)> density, int cells, double tol)
        : density_(std::move(density)), cum_(static_cast<std::size_t>(cells) + 1, 0.0) {
        const double cell_tol = tol / cells;
        for (int j = 0; j < cells; ++j) {
            const double a = static_cast<double>(j) / cells;
            const double b = static_cast<double>(j + 1) / cells;
            cum_[static_cast<std::size_t>(j) + 1] =
                cum_[static_cast<std::size_t>(j)] + adaptive_simpson(density_, a, b, cell_tol);
        }
    }

    double operator()(double t) const {
        t = clamp01(t);
        const int cells = static_cast<int>(cum_.size()) - 1;
        const int j = std::min(static_cast<int>(t * cells), cells - 1);
        const double a = static_cast<double>(j) / cells;
        return cum_[static_cast<std::size_t>(j)] + adaptive_simpson(density_, a, t, 1e-13);
    }

private:
    std::function<double(double)> density_;
    std::vector<double> cum_;
};

double kahan_sum(std::span<const double> values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

double WeightDensity::operator()(double t) const {
    switch (kind_) {
    case WeightKind::Uniform:
        return 1.0;
    case WeightKind::Power:
        return a_ * std::pow(1.0 - clamp01(t), a_ - 1.0);
    case WeightKind::Cvar:
        return t < a_ ? 1.0 / a_ : 0.0;
    case WeightKind::Hurwicz:
        if (t < b_) {
            return a_ / b_;
        }
        if (t > 1.0 - b_) {
            return (1.0 - a_) / b_;
        }
        return 0.0;
    case WeightKind::Custom:
        return density_(t);
    }
    return 0.0;
}

double WeightDensity::cumulative(double t) const {
    t = clamp01(t);
    switch (kind_) {
    case WeightKind::Uniform:
        return t;
    case WeightKind::Power:
        return 1.0 - std::pow(1.0 - t, a_);
    case WeightKind::Cvar:
        return t < a_ ? t / a_ : 1.0;
    case WeightKind::Hurwicz:
        if (t <= b_) {
            return a_ * (t / b_);
        }
        if (t <= 1.0 - b_) {
            return a_;
        }
        return a_ + (1.0 - a_) * ((t - (1.0 - b_)) / b_);
    case WeightKind::Custom:
        return antiderivative_(t);
    }
    return 0.0;
}

std::string WeightDensity::spec_string() const {
    switch (kind_) {
    case WeightKind::Uniform:
        return "uniform";
    case WeightKind::Power:
        return "power:" + format_double(a_);
    case WeightKind::Cvar:
        return "cvar:" + format_double(a_);
    case WeightKind::Hurwicz:
        return "hurwicz:" + format_double(a_) + ":" + format_double(b_);
    case WeightKind::Custom:
        return "custom";
    }
    return "custom";
}

WeightDensity make_uniform_weight() {
    WeightDensity w;
    w.kind_ = WeightKind::Uniform;
    return w;
}

WeightDensity make_power_weight(double alpha) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
        throw ParameterError("power weight requires alpha >= 1 (density is unbounded otherwise)");
    }
    WeightDensity w;
    w.kind_ = WeightKind::Power;
    w.a_ = alpha;
    return w;
}

WeightDensity make_cvar_weight(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0)) {
        throw ParameterError("cvar weight requires alpha in (0, 1]");
    }
    WeightDensity w;
    w.kind_ = WeightKind::Cvar;
    w.a_ = alpha;
    if (alpha < 1.0) {
        w.breakpoints_ = {alpha};
    }
    return w;
}

WeightDensity make_hurwicz_weight(double mix, double eps) {
    if (!(mix >= 0.0) || !(mix <= 1.0)) {
        throw ParameterError("hurwicz weight requires mix in [0, 1]");
    }
    if (!(eps > 0.0) || !(eps < 0.5)) {
        throw ParameterError("hurwicz weight requires eps in (0, 0.5)");
    }
    WeightDensity w;
    w.kind_ = WeightKind::Hurwicz;
    w.a_ = mix;
    w.b_ = eps;
    w.breakpoints_ = {eps, 1.0 - eps};
    return w;
}

WeightDensity make_custom_weight(std::function<double(double)> density,
                                 std::function<double(double)> antiderivative) {
    WeightDensity w;
    w.kind_ = WeightKind::Custom;
    w.density_ = std::move(density);
    w.antiderivative_ = std::move(antiderivative);
    for (int i = 0; i <= 100; ++i) {
        if (w.density_(i / 100.0) < -1e-12) {
            throw ParameterError("weight density must be nonnegative");
        }
    }
    check_normalized(w, 1e-12);
    return w;
}

WeightDensity make_custom_weight(std::function<double(double)> density) {
    auto cached = std::make_shared<CachedAntiderivative>(density, 256, 1e-10);
    WeightDensity w;
    w.kind_ = WeightKind::Custom;
    w.density_ = std::move(density);
    w.antiderivative_ = [cached](double t) { return (*cached)(t); };
    for (int i = 0; i <= 100; ++i) {
        if (w.density_(i / 100.0) < -1e-12) {
            throw ParameterError("weight density must be nonnegative");
        }
    }
    check_normalized(w, 1e-9);
    return w;
}

WeightDensity parse_weight_spec(std::string_view spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t colon = spec.find(':', start);
        if (colon == std::string_view::npos) {
            parts.emplace_back(spec.substr(start));
            break;
        }
        parts.emplace_back(spec.substr(start, colon - start));
        start = colon + 1;
    }

    auto number = [&](const std::string& text) {
        try {
            std::size_t used = 0;
            const double value = std::stod(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return value;
        } catch (const std::exception&) {
            throw ParseError("invalid number '" + text + "' in weight spec '" + std::string(spec) + "'");
        }
    };

    if (parts[0] == "uniform" && parts.size() == 1) {
        return make_uniform_weight();
    }
    if (parts[0] == "power" && parts.size() == 2) {
        return make_power_weight(number(parts[1]));
    }
    if (parts[0] == "cvar" && parts.size() == 2) {
        return make_cvar_weight(number(parts[1]));
    }
    if (parts[0] == "hurwicz" && parts.size() == 3) {
        return make_hurwicz_weight(number(parts[1]), number(parts[2]));
    }
    throw ParseError("unknown weight spec '" + std::string(spec) +
                     "' (expected uniform | power:<a> | cvar:<a> | hurwicz:<mix>:<eps>)");
}

BinWeights bin_integrals(const WeightDensity& w, int K) {
    if (K < 1) {
        throw ParameterError("bin count K must be at least 1");
    }
    BinWeights bins;
    bins.values.resize(static_cast<std::size_t>(K));
    double prev = w.cumulative(0.0);
    for (int k = 1; k <= K; ++k) {
        const double next = w.cumulative(static_cast<double>(k) / K);
        bins.values[static_cast<std::size_t>(k) - 1] = std::max(0.0, next - prev);
        prev = next;
    }
    const double total = kahan_sum(bins.values);
    if (std::abs(total - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "bin integrals sum to " << total << ", not 1";
        throw ParameterError(msg.str());
    }
    return bins;
}

CumulativeWeight cumulative_from_density(const WeightDensity& w) {
    return CumulativeWeight{[w](double y) { return w.cumulative(y); }};
}

double yager_lambda(const CumulativeWeight& W, double quad_tol) {
    if (!W.evaluate) {
        throw ValidationError("cumulative weight has no evaluator");
    }
    constexpr int kProbes = 2048;
    double prev = W.evaluate(0.0);
    if (std::abs(prev) > 1e-9) {
        throw ValidationError("cumulative weight must satisfy W(0) = 0");
    }
    for (int i = 1; i <= kProbes; ++i) {
        const double cur = W.evaluate(static_cast<double>(i) / kProbes);
        if (cur < prev - 1e-12) {
            throw ValidationError("cumulative weight is not monotone nondecreasing");
        }
        prev = cur;
    }
    if (std::abs(prev - 1.0) > 1e-9) {
        throw ValidationError("cumulative weight must satisfy W(1) = 1");
    }
    const double lambda = integrate_piecewise(W.evaluate, 0.0, 1.0, {}, quad_tol);
    return std::clamp(lambda, 0.0, 1.0);
}

double hurwicz_value(double a, double b, double lambda) {
    return lambda * b + (1.0 - lambda) * a;
}

} // namespace owa
