#ifndef OWA_GENERATORS_HPP
#define OWA_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "owa/instance.hpp"

namespace owa {

enum class InstanceType { TypeI, TypeII };

std::string_view instance_type_name(InstanceType type); // "I" / "II"
InstanceType parse_instance_type(std::string_view name); // accepts I/II/1/2

/// Type I (random pair): each interval is the min/max of two independent
/// uniform integers in {1, ..., 11}. Deterministic in (n, seed); defaults to
/// selection feasibility with p = max(1, n/2) when p is not given.
IntervalInstance gen_type1(int n, std::uint64_t seed, std::optional<int> p = {});

/// Type II (midpoint deviation): midpoint uniform in {14, ..., 17}, deviation
/// uniform in {1, ..., 11}, interval [mid - dev, mid + dev].
IntervalInstance gen_type2(int n, std::uint64_t seed, std::optional<int> p = {});

IntervalInstance generate_instance(InstanceType type, int n, std::uint64_t seed,
                                   std::optional<int> p = {});

} // namespace owa

#endif // OWA_GENERATORS_HPP
