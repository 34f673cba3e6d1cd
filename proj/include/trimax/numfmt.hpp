#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace trimax {

// Locale-independent decimal formatting with a fixed number of significant
// digits (std::to_chars, general form). Identical input bits always yield
// identical text, which is what makes the CLI outputs byte-reproducible.
inline std::string fmt_sig(double v, int digits = 9) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

}  // namespace trimax
