#include "owa/instance.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "owa/errors.hpp"

namespace owa {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; recover the line for the message.
        std::size_t line = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
            }
        }
        std::ostringstream msg;
        msg << "malformed " << what << " at line " << line << ": " << e.what();
        throw ParseError(msg.str());
    }
}

} // namespace

FeasibleSet make_selection(int n, int p) {
    return Selection{n, p};
}

FeasibleSet make_uniform_matroid(int n, int rank) {
    MatroidOracle oracle;
    oracle.n = n;
    oracle.uniform_rank = rank;
    oracle.is_independent = [rank](std::span<const int> subset) {
        return static_cast<int>(subset.size()) <= rank;
    };
    return oracle;
}

FeasibleSet make_matroid_oracle(int n, std::function<bool(std::span<const int>)> is_independent) {
    MatroidOracle oracle;
    oracle.n = n;
    oracle.is_independent = std::move(is_independent);
    return oracle;
}

int feasible_set_size(const FeasibleSet& fs) {
    return std::visit([](const auto& f) { return f.n; }, fs);
}

std::optional<int> basis_rank(const FeasibleSet& fs) {
    if (const auto* sel = std::get_if<Selection>(&fs)) {
        return sel->p;
    }
    return std::get<MatroidOracle>(fs).uniform_rank;
}

Solution::Solution(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        bits_.push_back(b != 0 ? 1 : 0);
    }
}

Solution Solution::from_selected(std::size_t n, std::span<const int> selected) {
    Solution x(n);
    for (int i : selected) {
        if (i < 0 || static_cast<std::size_t>(i) >= n) {
            throw ValidationError("selected index out of range");
        }
        x.set(static_cast<std::size_t>(i), true);
    }
    return x;
}

int Solution::popcount() const {
    int count = 0;
    for (auto b : bits_) {
        count += b;
    }
    return count;
}

std::vector<int> Solution::selected_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

void IntervalInstance::validate() const {
    if (items.empty()) {
        throw ValidationError("instance must have at least one item");
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!(items[i].lo <= items[i].hi)) {
            std::ostringstream msg;
            msg << "item " << (i + 1) << ": lower bound " << items[i].lo
                << " exceeds upper bound " << items[i].hi;
            throw ValidationError(msg.str());
        }
    }
    if (feasible_set_size(feasibility) != n()) {
        throw ValidationError("feasibility ground-set size does not match item count");
    }
    if (const auto* sel = std::get_if<Selection>(&feasibility)) {
        if (sel->p < 0 || sel->p > sel->n) {
            std::ostringstream msg;
            msg << "selection size p=" << sel->p << " must lie in [0, " << sel->n << "]";
            throw ValidationError(msg.str());
        }
    } else {
        const auto& oracle = std::get<MatroidOracle>(feasibility);
        if (oracle.uniform_rank && (*oracle.uniform_rank < 0 || *oracle.uniform_rank > oracle.n)) {
            throw ValidationError("uniform matroid rank out of range");
        }
        if (!oracle.is_independent) {
            throw ValidationError("matroid oracle has no independence test");
        }
    }
}

IntervalInstance make_instance(std::vector<Interval> items, FeasibleSet feasibility) {
    IntervalInstance instance{std::move(items), std::move(feasibility)};
    instance.validate();
    return instance;
}

IntervalInstance parse_instance(std::string_view text) {
    const json doc = parse_json(text, "instance file");
    if (!doc.is_object()) {
        throw ParseError("instance file must be a JSON object");
    }
    for (const char* field : {"n", "intervals", "feasibility"}) {
        if (!doc.contains(field)) {
            throw ParseError(std::string("instance file missing field '") + field + "'");
        }
    }

    const int n = doc.at("n").get<int>();
    const auto& intervals = doc.at("intervals");
    if (!intervals.is_array() || static_cast<int>(intervals.size()) != n) {
        throw ParseError("'intervals' must be an array of length n");
    }

    std::vector<Interval> items;
    items.reserve(intervals.size());
    for (const auto& pair : intervals) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("each interval must be a [lo, hi] pair");
        }
        items.push_back(Interval{pair[0].get<double>(), pair[1].get<double>()});
    }

    const auto& feas = doc.at("feasibility");
    const std::string type = feas.at("type").get<std::string>();
    FeasibleSet feasibility;
    if (type == "selection") {
        feasibility = make_selection(n, feas.at("p").get<int>());
    } else if (type == "uniform_matroid") {
        feasibility = make_uniform_matroid(n, feas.at("rank").get<int>());
    } else {
        throw ParseError("unknown feasibility type '" + type + "'");
    }

    return make_instance(std::move(items), std::move(feasibility));
}

std::string serialize_instance(const IntervalInstance& instance) {
    json doc;
    doc["n"] = instance.n();
    json intervals = json::array();
    for (const auto& item : instance.items) {
        intervals.push_back(json::array({item.lo, item.hi}));
    }
    doc["intervals"] = std::move(intervals);

    if (const auto* sel = std::get_if<Selection>(&instance.feasibility)) {
        doc["feasibility"] = {{"type", "selection"}, {"p", sel->p}};
    } else {
        const auto& oracle = std::get<MatroidOracle>(instance.feasibility);
        if (!oracle.uniform_rank) {
            throw ValidationError("only uniform-matroid oracles can be serialized");
        }
        doc["feasibility"] = {{"type", "uniform_matroid"}, {"rank", *oracle.uniform_rank}};
    }
    return doc.dump();
}

Solution parse_solution(std::string_view text, int n) {
    const json doc = parse_json(text, "solution file");
    if (!doc.is_object() || !doc.contains("selected")) {
        throw ParseError("solution file must be an object with a 'selected' array");
    }
    Solution x(static_cast<std::size_t>(n));
    for (const auto& idx : doc.at("selected")) {
        const int one_based = idx.get<int>();
        if (one_based < 1 || one_based > n) {
            std::ostringstream msg;
            msg << "selected index " << one_based << " out of range [1, " << n << "]";
            throw ValidationError(msg.str());
        }
        x.set(static_cast<std::size_t>(one_based - 1), true);
    }
    return x;
}

std::string serialize_solution(const Solution& x) {
    json doc;
    json selected = json::array();
    for (int i : x.selected_indices()) {
        selected.push_back(i + 1);
    }
    doc["selected"] = std::move(selected);
    return doc.dump();
}

bool is_basis(const FeasibleSet& fs, const Solution& x) {
    if (static_cast<int>(x.size()) != feasible_set_size(fs)) {
        throw DimensionError("solution length does not match the feasible set's ground set");
    }
    if (const auto* sel = std::get_if<Selection>(&fs)) {
        return x.popcount() == sel->p;
    }
    const auto& oracle = std::get<MatroidOracle>(fs);
    const std::vector<int> selected = x.selected_indices();
    if (!oracle.is_independent(selected)) {
        return false;
    }
    // Maximal: no unselected element extends the independent set.
    std::vector<int> extended(selected.size() + 1);
    for (int e = 0; e < oracle.n; ++e) {
        if (x.selected(static_cast<std::size_t>(e))) {
            continue;
        }
        auto mid = std::copy(selected.begin(), selected.end(), extended.begin());
        *mid = e;
        std::inplace_merge(extended.begin(), mid, extended.end());
        if (oracle.is_independent(extended)) {
            return false;
        }
    }
    return true;
}

bool is_feasible(const IntervalInstance& instance, const Solution& x) {
    if (static_cast<int>(x.size()) != instance.n()) {
        throw DimensionError("solution length does not match instance size");
    }
    return is_basis(instance.feasibility, x);
}

double deterministic_cost(std::span<const double> costs, const Solution& x) {
    if (costs.size() != x.size()) {
        throw DimensionError("cost vector length does not match solution length");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < costs.size(); ++i) {
        if (x.selected(i)) {
            total += costs[i];
        }
    }
    return total;
}

std::pair<double, double> cost_bounds(const IntervalInstance& instance, const Solution& x) {
    if (static_cast<int>(x.size()) != instance.n()) {
        throw DimensionError("solution length does not match instance size");
    }
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.selected(i)) {
            lo += instance.items[i].lo;
            hi += instance.items[i].hi;
        }
    }
    return {lo, hi};
}

std::vector<double> midpoint_costs(const IntervalInstance& instance) {
    std::vector<double> mids;
    mids.reserve(instance.items.size());
    for (const auto& item : instance.items) {
        mids.push_back(item.midpoint());
    }
    return mids;
}

} // namespace owa
