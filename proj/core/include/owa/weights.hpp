#ifndef OWA_WEIGHTS_HPP
#define OWA_WEIGHTS_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace owa {

enum class WeightKind { Uniform, Power, Cvar, Hurwicz, Custom };

/// A normalized, bounded, almost-everywhere-continuous preference density
/// w on [0, 1], together with its antiderivative W (W(0) = 0, W(1) = 1).
/// t = 0 weights the worst outcome, t = 1 the best. Immutable and cheap to
/// copy; evaluation is pure and thread-safe.
class WeightDensity {
public:
    /// Density value w(t).
    double operator()(double t) const;

    /// Antiderivative W(t) = integral of w over [0, t].
    double cumulative(double t) const;

    WeightKind kind() const { return kind_; }

    /// Interior discontinuities of the density (empty for uniform/power).
    std::span<const double> breakpoints() const { return breakpoints_; }

    /// Parameters; meaning depends on kind (power/cvar: alpha; hurwicz:
    /// param_a = mix, param_b = epsilon).
    double param_a() const { return a_; }
    double param_b() const { return b_; }

    /// Canonical CLI spec string (`power:2`, `cvar:0.1`, ...).
    std::string spec_string() const;

private:
    friend WeightDensity make_uniform_weight();
    friend WeightDensity make_power_weight(double);
    friend WeightDensity make_cvar_weight(double);
    friend WeightDensity make_hurwicz_weight(double, double);
    friend WeightDensity make_custom_weight(std::function<double(double)>,
                                            std::function<double(double)>);
    friend WeightDensity make_custom_weight(std::function<double(double)>);

    WeightDensity() = default;

    WeightKind kind_ = WeightKind::Uniform;
    double a_ = 0.0;
    double b_ = 0.0;
    std::vector<double> breakpoints_;
    std::function<double(double)> density_;        // custom only
    std::function<double(double)> antiderivative_; // custom only
};

/// w(t) = 1: the average case.
WeightDensity make_uniform_weight();

/// w(t) = alpha * (1 - t)^(alpha - 1) for alpha >= 1; alpha = 1 is the
/// average case, larger alpha concentrates weight on worse outcomes.
WeightDensity make_power_weight(double alpha);

/// w(t) = 1/alpha on [0, alpha), 0 elsewhere, for alpha in (0, 1]: the
/// alpha-CVaR (mean of the worst alpha-fraction of outcomes).
WeightDensity make_cvar_weight(double alpha);

/// Two-sided step density: mix/eps on [0, eps) plus (1 - mix)/eps on
/// (1 - eps, 1]. As eps -> 0 the objective tends to the Hurwicz mix of
/// worst and best case; `hurwicz_value` gives that limit in closed form.
WeightDensity make_hurwicz_weight(double mix, double eps);

/// Custom density with a caller-supplied antiderivative (normalization is
/// validated to 1e-12).
WeightDensity make_custom_weight(std::function<double(double)> density,
                                 std::function<double(double)> antiderivative);

/// Custom density without an antiderivative: a composite adaptive-Simpson
/// antiderivative (tolerance 1e-10) is built once at construction and cached.
WeightDensity make_custom_weight(std::function<double(double)> density);

/// Parses CLI weight specs: `uniform`, `power:<alpha>`, `cvar:<alpha>`,
/// `hurwicz:<mix>:<eps>`.
WeightDensity parse_weight_spec(std::string_view spec);

/// Integrals of the density over the K uniform bins of [0, 1]; the bridge
/// between the continuous operator and the discrete one.
struct BinWeights {
    std::vector<double> values;

    int K() const { return static_cast<int>(values.size()); }
};

/// values[k] = W((k+1)/K) - W(k/K); exact for the closed-form kinds.
BinWeights bin_integrals(const WeightDensity& w, int K);

/// Monotone cumulative quantifier in Yager's sense: evaluate(0) = 0,
/// evaluate(1) = 1, nondecreasing.
struct CumulativeWeight {
    std::function<double(double)> evaluate;
};

/// The cumulative quantifier expressing the same attitude as a density:
/// W(y) = integral of w over [0, y].
CumulativeWeight cumulative_from_density(const WeightDensity& w);

/// lambda = 1 - integral of y dW(y), computed by parts as the integral of
/// W over [0, 1] with adaptive quadrature to quad_tol. Monotonicity and the
/// endpoint values of W are validated on a probe grid first.
double yager_lambda(const CumulativeWeight& W, double quad_tol = 1e-10);

/// Closed-form bound aggregation lambda * b + (1 - lambda) * a.
double hurwicz_value(double a, double b, double lambda);

} // namespace owa

#endif // OWA_WEIGHTS_HPP
