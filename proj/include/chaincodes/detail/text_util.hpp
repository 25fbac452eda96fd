/*
   Copyright 2026 The chaincodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHAINCODES_DETAIL_TEXT_UTIL_HPP
#define CHAINCODES_DETAIL_TEXT_UTIL_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chaincodes/errors.hpp"

namespace chaincodes::text {

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
    return out;
}

/// Splits on sep, ignoring separators nested inside (), [] or {}.
inline std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

inline int64_t parse_int(std::string_view s) {
    int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return v;
}

inline std::vector<int64_t> parse_int_list(std::string_view s) {
    std::vector<int64_t> out;
    for (const auto& item : split_top_level(s, ',')) out.push_back(parse_int(strip_spaces(item)));
    return out;
}

}  // namespace chaincodes::text

#endif
