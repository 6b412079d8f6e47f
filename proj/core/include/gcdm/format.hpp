#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace gcdm {

// Shortest decimal form that parses back to the same double. Used for
// every machine-readable number the library emits, so serialized output
// is byte-stable and lossless.
inline std::string to_shortest(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

}  // namespace gcdm
