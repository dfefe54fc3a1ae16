#ifndef OWA_INSTANCE_HPP
#define OWA_INSTANCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace owa {

/// Closed cost interval [lo, hi]. Degenerate intervals (lo == hi) represent
/// deterministic costs.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool degenerate() const { return lo == hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Feasible sets X = {x : sum x_i = p} ("pick p of n").
struct Selection {
    int n = 0;
    int p = 0;

    friend bool operator==(const Selection&, const Selection&) = default;
};

/// Feasible sets given by a matroid independence oracle over ground set
/// {0, ..., n-1}; feasible solutions are the bases. `uniform_rank` is set
/// when the oracle is the uniform matroid, which is the only oracle the
/// instance file format can carry.
struct MatroidOracle {
    int n = 0;
    std::function<bool(std::span<const int>)> is_independent;
    std::optional<int> uniform_rank;
};

using FeasibleSet = std::variant<Selection, MatroidOracle>;

FeasibleSet make_selection(int n, int p);
FeasibleSet make_uniform_matroid(int n, int rank);
FeasibleSet make_matroid_oracle(int n, std::function<bool(std::span<const int>)> is_independent);

/// Ground-set size of a feasible set.
int feasible_set_size(const FeasibleSet& fs);

/// Target basis cardinality when known (Selection p / uniform matroid rank).
std::optional<int> basis_rank(const FeasibleSet& fs);

/// A 0/1 selection vector of length n.
class Solution {
public:
    Solution() = default;
    explicit Solution(std::size_t n) : bits_(n, 0) {}
    Solution(std::initializer_list<int> bits);

    /// Builds a solution from 0-based selected indices.
    static Solution from_selected(std::size_t n, std::span<const int> selected);

    std::size_t size() const { return bits_.size(); }
    bool selected(std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }

    int popcount() const;
    std::vector<int> selected_indices() const; // ascending, 0-based

    friend bool operator==(const Solution&, const Solution&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// A combinatorial minimization instance under interval cost uncertainty:
/// item cost intervals plus the feasibility structure. Immutable once built.
struct IntervalInstance {
    std::vector<Interval> items;
    FeasibleSet feasibility;

    int n() const { return static_cast<int>(items.size()); }

    /// Throws ValidationError if any invariant fails (n >= 1, lo <= hi,
    /// selection 0 <= p <= n, rank in range).
    void validate() const;
};

IntervalInstance make_instance(std::vector<Interval> items, FeasibleSet feasibility);

/// Parses an instance file: a JSON object with `n`, `intervals` (array of
/// [lo, hi] pairs) and `feasibility` ({"type":"selection","p":..} or
/// {"type":"uniform_matroid","rank":..}). Item indices in error messages
/// are 1-based.
IntervalInstance parse_instance(std::string_view text);
std::string serialize_instance(const IntervalInstance& instance);

/// Solutions serialize as {"selected":[...]} with 1-based indices ascending.
Solution parse_solution(std::string_view text, int n);
std::string serialize_solution(const Solution& x);

/// True iff x is a basis of the feasible set: exactly p items for a
/// selection, independent and maximal for a matroid oracle.
bool is_basis(const FeasibleSet& fs, const Solution& x);

/// True iff x satisfies the instance's feasibility structure. For matroid
/// oracles this means independent and maximal (a basis).
bool is_feasible(const IntervalInstance& instance, const Solution& x);

/// Nominal cost sum_i costs[i] * x_i; items are accumulated in ascending
/// index order.
double deterministic_cost(std::span<const double> costs, const Solution& x);

/// Per-item interval bounds of the selected total: (sum lo_i x_i, sum hi_i x_i).
std::pair<double, double> cost_bounds(const IntervalInstance& instance, const Solution& x);

/// Midpoint cost vector (lo_i + hi_i) / 2.
std::vector<double> midpoint_costs(const IntervalInstance& instance);

} // namespace owa

#endif // OWA_INSTANCE_HPP
