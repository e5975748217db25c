#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace intentsum {

// Text is handled as UTF-8 throughout; these helpers decode to Unicode
// scalar values and classify them. Invalid byte sequences decode to
// U+FFFD, one replacement per offending byte.

std::vector<char32_t> decode_utf8(std::string_view text);
void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);

// General category L* or N*.
bool is_alnum(char32_t cp);
// General category Lu or Lt.
bool is_upper(char32_t cp);
// Simple one-to-one lowercase mapping; identity when none exists.
char32_t to_lower(char32_t cp);

bool is_space(char32_t cp);

std::string lowercase(std::string_view text);

}  // namespace intentsum
