#include "owa/generators.hpp"

#include <algorithm>
#include <string>

#include "owa/errors.hpp"
#include "owa/rng.hpp"

namespace owa {

namespace {

int default_p(int n, std::optional<int> p) {
    if (p) {
        return *p;
    }
    return std::max(1, n / 2);
}

} // namespace

std::string_view instance_type_name(InstanceType type) {
    return type == InstanceType::TypeI ? "I" : "II";
}

InstanceType parse_instance_type(std::string_view name) {
    if (name == "I" || name == "1" || name == "i") {
        return InstanceType::TypeI;
    }
    if (name == "II" || name == "2" || name == "ii") {
        return InstanceType::TypeII;
    }
    throw ParseError("unknown instance type '" + std::string(name) + "' (expected I or II)");
}

IntervalInstance gen_type1(int n, std::uint64_t seed, std::optional<int> p) {
    if (n < 1) {
        throw ParameterError("instance size n must be at least 1");
    }
    std::vector<Interval> items;
    items.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const long a = keyed_uniform_int(seed, static_cast<std::uint64_t>(i), 0, 1, 11);
        const long b = keyed_uniform_int(seed, static_cast<std::uint64_t>(i), 1, 1, 11);
        items.push_back(Interval{static_cast<double>(std::min(a, b)),
                                 static_cast<double>(std::max(a, b))});
    }
    return make_instance(std::move(items), make_selection(n, default_p(n, p)));
}

IntervalInstance gen_type2(int n, std::uint64_t seed, std::optional<int> p) {
    if (n < 1) {
        throw ParameterError("instance size n must be at least 1");
    }
    std::vector<Interval> items;
    items.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const long mid = keyed_uniform_int(seed, static_cast<std::uint64_t>(i), 0, 14, 17);
        const long dev = keyed_uniform_int(seed, static_cast<std::uint64_t>(i), 1, 1, 11);
        items.push_back(Interval{static_cast<double>(mid - dev), static_cast<double>(mid + dev)});
    }
    return make_instance(std::move(items), make_selection(n, default_p(n, p)));
}

IntervalInstance generate_instance(InstanceType type, int n, std::uint64_t seed,
                                   std::optional<int> p) {
    return type == InstanceType::TypeI ? gen_type1(n, seed, p) : gen_type2(n, seed, p);
}

} // namespace owa
