#pragma once

#include <string>
#include <string_view>

namespace sparselex {

enum class StemmerKind {
    none,
    snowball_english,
};

StemmerKind stemmer_from_string(std::string_view name);
std::string_view to_string(StemmerKind k);

/// Snowball English (porter2) stemmer. Expects a single lowercase word;
/// non-ASCII bytes pass through untouched.
std::string stem_english(std::string_view word);

}  // namespace sparselex
