#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sparselex/stemmer.hpp"
#include "sparselex/vocabulary.hpp"

namespace sparselex {

struct TokenizerConfig {
    bool lowercase = true;
    std::unordered_set<std::string> stopwords;  // compared pre-stemming
    StemmerKind stemmer = StemmerKind::none;

    /// lowercase + bundled English stopwords + Snowball English stemmer.
    static TokenizerConfig english();
};

struct TokenizedDocument {
    std::unordered_map<uint32_t, uint32_t> term_counts;
    uint64_t length = 0;  // total token count, equals the sum of counts
};

/// Splits text into maximal runs of two or more word-class codepoints
/// (letters, digits, underscore); single-codepoint runs are dropped.
/// Invalid UTF-8 bytes act as separators.
std::vector<std::string> split_text(std::string_view text, bool lowercase = true);

/// Full pipeline (split -> lowercase -> stopword filter -> stem -> id),
/// assigning fresh ids to unseen tokens. Used while building an index.
std::vector<uint32_t> tokenize_build(std::string_view text,
                                     const TokenizerConfig& config,
                                     Vocabulary& vocab);

/// Same pipeline against a frozen vocabulary; out-of-vocabulary tokens are
/// dropped. Used at query time.
std::vector<uint32_t> tokenize_query(std::string_view text,
                                     const TokenizerConfig& config,
                                     const Vocabulary& vocab);

TokenizedDocument count_terms(std::span<const uint32_t> ids);

}  // namespace sparselex
