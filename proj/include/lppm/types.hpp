#pragma once

#include <charconv>
#include <string>
#include <vector>

#include "lppm/errors.hpp"

namespace lppm {

// A joint assignment of locations to a block of time offsets, listed in
// increasing time order. Used for protection targets, exposed histories and
// reported pseudolocation blocks alike.
using Assignment = std::vector<int>;

// Dash-joined location ids, e.g. "12-7"; the empty assignment serializes to "".
inline std::string format_assignment(const Assignment& a) {
    std::string out;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(a[i]);
    }
    return out;
}

inline Assignment parse_assignment(const std::string& s) {
    Assignment out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t dash = s.find('-', pos);
        if (dash == std::string::npos) dash = s.size();
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + dash, value);
        if (ec != std::errc() || ptr != s.data() + dash || value < 0)
            throw ValidationError("malformed assignment: '" + s + "'");
        out.push_back(value);
        pos = dash + 1;
        if (dash == s.size()) break;
    }
    return out;
}

}  // namespace lppm
