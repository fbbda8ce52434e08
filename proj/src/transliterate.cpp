#include "cpcc/ingest.hpp"

#include <array>

namespace cpcc::ingest {

namespace {

// U+00A0 .. U+017F. nullptr marks a code point without a mapping.
constexpr std::array<const char*, 0x180 - 0xA0> kLatinTable = {
    // A0..AF: nbsp and symbols
    " ", " ", " ", " ", " ", " ", " ", " ", " ", " ", "a", " ", " ", "", " ", " ",
    // B0..BF
    " ", " ", "2", "3", " ", " ", " ", " ", " ", "1", "o", " ", " ", " ", " ", " ",
    // C0..CF
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    // D0..DF
    "d", "n", "o", "o", "o", "o", "o", " ", "o", "u", "u", "u", "u", "y", "th", "ss",
    // E0..EF
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    // F0..FF
    "d", "n", "o", "o", "o", "o", "o", " ", "o", "u", "u", "u", "u", "y", "th", "y",
    // 0100..010F
    "a", "a", "a", "a", "a", "a", "c", "c", "c", "c", "c", "c", "c", "c", "d", "d",
    // 0110..011F
    "d", "d", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "g", "g", "g", "g",
    // 0120..012F
    "g", "g", "g", "g", "h", "h", "h", "h", "i", "i", "i", "i", "i", "i", "i", "i",
    // 0130..013F
    "i", "i", "ij", "ij", "j", "j", "k", "k", "k", "l", "l", "l", "l", "l", "l", "l",
    // 0140..014F
    "l", "l", "l", "n", "n", "n", "n", "n", "n", "n", "n", "n", "o", "o", "o", "o",
    // 0150..015F
    "o", "o", "oe", "oe", "r", "r", "r", "r", "r", "r", "s", "s", "s", "s", "s", "s",
    // 0160..016F
    "s", "s", "t", "t", "t", "t", "t", "t", "u", "u", "u", "u", "u", "u", "u", "u",
    // 0170..017F
    "u", "u", "u", "u", "w", "w", "y", "y", "y", "z", "z", "z", "z", "z", "z", "s",
};

} // namespace

std::optional<std::string_view> transliterate(char32_t cp) {
    if (cp >= 0xA0 && cp < 0x180) {
        const char* mapped = kLatinTable[cp - 0xA0];
        if (mapped == nullptr) return std::nullopt;
        return std::string_view{mapped};
    }
    switch (cp) {
        case 0x0218: case 0x0219: return "s";  // Romanian comma-below
        case 0x021A: case 0x021B: return "t";
        case 0x2018: case 0x2019: case 0x02BC: return "";  // apostrophes vanish
        case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2014: case 0x2015:
        case 0x201A: case 0x201B: case 0x201C: case 0x201D: case 0x201E: case 0x201F:
        case 0x2022: case 0x2026: case 0x2000: case 0x2002: case 0x2003: case 0x2009:
        case 0x202F: case 0x20AC: case 0x2122: case 0x3000:
            return " ";
        case 0x200B: case 0xFEFF: return "";  // zero-width
        default: return std::nullopt;
    }
}

} // namespace cpcc::ingest
