#include "intentsum/unicode.hpp"

#include <algorithm>
#include <iterator>

namespace intentsum {

namespace {

struct CodepointRange {
    uint32_t first;
    uint32_t last;
};

struct LowercaseMapping {
    uint32_t from;
    uint32_t to;
};

#include "unicode_tables.inc"

template <size_t N>
bool in_ranges(const CodepointRange (&table)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(table), std::end(table), static_cast<uint32_t>(cp),
                               [](uint32_t v, const CodepointRange& r) { return v < r.first; });
    if (it == std::begin(table)) return false;
    --it;
    return static_cast<uint32_t>(cp) <= it->last;
}

constexpr char32_t kReplacement = 0xFFFD;

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        unsigned char b0 = static_cast<unsigned char>(text[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + len > n) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        char32_t decoded = cp;
        for (int k = 1; k < len; ++k) {
            unsigned char b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            decoded = (decoded << 6) | (b & 0x3F);
        }
        // Reject overlong forms, surrogates and out-of-range values.
        if (ok) {
            if ((len == 2 && decoded < 0x80) || (len == 3 && decoded < 0x800) ||
                (len == 4 && decoded < 0x10000) || decoded > 0x10FFFF ||
                (decoded >= 0xD800 && decoded <= 0xDFFF)) {
                ok = false;
            }
        }
        if (!ok) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(decoded);
        i += len;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

bool is_alnum(char32_t cp) { return in_ranges(kAlnumRanges, cp); }

bool is_upper(char32_t cp) { return in_ranges(kUpperRanges, cp); }

char32_t to_lower(char32_t cp) {
    auto it = std::lower_bound(std::begin(kLowercaseMap), std::end(kLowercaseMap),
                               static_cast<uint32_t>(cp),
                               [](const LowercaseMapping& m, uint32_t v) { return m.from < v; });
    if (it != std::end(kLowercaseMap) && it->from == static_cast<uint32_t>(cp)) return it->to;
    return cp;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case U' ':
        case U'\t':
        case U'\n':
        case U'\r':
        case U'\f':
        case U'\v':
        case 0x85:    // NEL
        case 0xA0:    // NBSP
        case 0x2028:  // line separator
        case 0x2029:  // paragraph separator
            return true;
        default:
            return (cp >= 0x2000 && cp <= 0x200A) || cp == 0x1680 || cp == 0x202F ||
                   cp == 0x205F || cp == 0x3000;
    }
}

std::string lowercase(std::string_view text) {
    std::vector<char32_t> cps = decode_utf8(text);
    for (char32_t& cp : cps) cp = to_lower(cp);
    return encode_utf8(cps);
}

}  // namespace intentsum
