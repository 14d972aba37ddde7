#include "sparselex/tokenizer.hpp"

#include <algorithm>

#include "sparselex/stopwords.hpp"
#include "unicode_tables.hpp"

namespace sparselex {

namespace {

bool is_word_codepoint(char32_t cp) {
    const detail::CodepointRange* begin = detail::kWordRanges;
    const detail::CodepointRange* end = begin + detail::kWordRangeCount;
    auto it = std::upper_bound(begin, end, cp,
                               [](char32_t v, const detail::CodepointRange& r) {
                                   return v < r.first;
                               });
    return it != begin && cp <= (it - 1)->last;
}

char32_t to_lower_codepoint(char32_t cp) {
    // ASCII fast path.
    if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
    const detail::LowerPair* begin = detail::kLowerPairs;
    const detail::LowerPair* end = begin + detail::kLowerPairCount;
    auto it = std::lower_bound(begin, end, cp,
                               [](const detail::LowerPair& p, char32_t v) {
                                   return p.from < v;
                               });
    return (it != end && it->from == cp) ? it->to : cp;
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

// Decodes one codepoint starting at `pos`; advances `pos` past it. Returns
// U+FFFD (never a word character) for malformed sequences, consuming one byte.
char32_t decode_utf8(std::string_view s, size_t& pos) {
    const auto byte = [&](size_t i) { return static_cast<unsigned char>(s[i]); };
    const unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    size_t len = 0;
    char32_t cp = 0;
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
        ++pos;
        return 0xFFFD;
    }
    if (pos + len > s.size()) {
        ++pos;
        return 0xFFFD;
    }
    for (size_t i = 1; i < len; ++i) {
        const unsigned char bi = byte(pos + i);
        if ((bi & 0xC0) != 0x80) {
            ++pos;
            return 0xFFFD;
        }
        cp = (cp << 6) | (bi & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range values.
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++pos;
        return 0xFFFD;
    }
    pos += len;
    return cp;
}

template <typename Sink>
void for_each_token(std::string_view text, bool lowercase, Sink&& sink) {
    std::string current;
    size_t current_cps = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = decode_utf8(text, pos);
        if (is_word_codepoint(cp)) {
            append_utf8(current, lowercase ? to_lower_codepoint(cp) : cp);
            ++current_cps;
        } else if (!current.empty()) {
            if (current_cps >= 2) sink(std::move(current));
            current.clear();
            current_cps = 0;
        }
    }
    if (current_cps >= 2) sink(std::move(current));
}

template <typename Lookup>
std::vector<uint32_t> run_pipeline(std::string_view text,
                                   const TokenizerConfig& config,
                                   Lookup&& lookup) {
    std::vector<uint32_t> ids;
    for_each_token(text, config.lowercase, [&](std::string token) {
        if (!config.stopwords.empty() && config.stopwords.contains(token)) return;
        if (config.stemmer == StemmerKind::snowball_english)
            token = stem_english(token);
        lookup(std::move(token), ids);
    });
    return ids;
}

}  // namespace

TokenizerConfig TokenizerConfig::english() {
    return TokenizerConfig{true, english_stopwords(), StemmerKind::snowball_english};
}

std::vector<std::string> split_text(std::string_view text, bool lowercase) {
    std::vector<std::string> tokens;
    for_each_token(text, lowercase,
                   [&](std::string token) { tokens.push_back(std::move(token)); });
    return tokens;
}

std::vector<uint32_t> tokenize_build(std::string_view text,
                                     const TokenizerConfig& config,
                                     Vocabulary& vocab) {
    return run_pipeline(text, config,
                        [&](std::string token, std::vector<uint32_t>& ids) {
                            ids.push_back(vocab.add_or_get(std::move(token)));
                        });
}

std::vector<uint32_t> tokenize_query(std::string_view text,
                                     const TokenizerConfig& config,
                                     const Vocabulary& vocab) {
    return run_pipeline(text, config,
                        [&](std::string token, std::vector<uint32_t>& ids) {
                            if (auto id = vocab.lookup(token)) ids.push_back(*id);
                        });
}

TokenizedDocument count_terms(std::span<const uint32_t> ids) {
    TokenizedDocument doc;
    doc.term_counts.reserve(ids.size());
    for (uint32_t id : ids) ++doc.term_counts[id];
    doc.length = ids.size();
    return doc;
}

}  // namespace sparselex
