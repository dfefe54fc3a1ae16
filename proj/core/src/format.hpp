#ifndef OWA_SRC_FORMAT_HPP
#define OWA_SRC_FORMAT_HPP

#include <charconv>
#include <string>

namespace owa {

/// Shortest decimal text that round-trips the double exactly.
inline std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

} // namespace owa

#endif // OWA_SRC_FORMAT_HPP
