#pragma once

#include <cstddef>
#include <cstdint>

namespace sparselex::detail {

struct CodepointRange {
    char32_t first;
    char32_t last;  // inclusive
};

struct LowerPair {
    char32_t from;
    char32_t to;
};

// Sorted, non-overlapping ranges of word-class codepoints (letters, digits,
// underscore per the Unicode database). See tools/gen_unicode_tables.py.
extern const CodepointRange kWordRanges[];
extern const std::size_t kWordRangeCount;

// Sorted by `from`; simple 1:1 lowercase mappings.
extern const LowerPair kLowerPairs[];
extern const std::size_t kLowerPairCount;

}  // namespace sparselex::detail
