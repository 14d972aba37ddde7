#include "sparselex/stemmer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sparselex {

StemmerKind stemmer_from_string(std::string_view name) {
    if (name == "none") return StemmerKind::none;
    if (name == "snowball-english" || name == "snowball_english")
        return StemmerKind::snowball_english;
    throw std::invalid_argument("unknown stemmer: " + std::string(name));
}

std::string_view to_string(StemmerKind k) {
    switch (k) {
        case StemmerKind::none: return "none";
        case StemmerKind::snowball_english: return "snowball-english";
    }
    throw std::invalid_argument("invalid StemmerKind value");
}

// Snowball English ("porter2") stemmer, operating on codepoints. Region
// marks p1/p2 are positions into the word; suffix removal only shortens the
// tail, so they stay valid (possibly past the end) throughout.
namespace {

using std::u32string;
using std::u32string_view;

bool decode(std::string_view in, u32string& out) {
    size_t i = 0;
    while (i < in.size()) {
        const unsigned char b0 = static_cast<unsigned char>(in[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        size_t len;
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
            return false;
        }
        if (i + len > in.size()) return false;
        for (size_t k = 1; k < len; ++k) {
            const unsigned char bk = static_cast<unsigned char>(in[i + k]);
            if ((bk & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (bk & 0x3F);
        }
        out.push_back(cp);
        i += len;
    }
    return true;
}

std::string encode(u32string_view in) {
    std::string out;
    out.reserve(in.size());
    for (char32_t cp : in) {
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
    return out;
}

bool is_vowel(char32_t c) {
    return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' ||
           c == U'y';
}

bool is_double_consonant(char32_t c) {
    switch (c) {
        case U'b': case U'd': case U'f': case U'g': case U'm':
        case U'n': case U'p': case U'r': case U't':
            return true;
        default:
            return false;
    }
}

bool is_valid_li_ending(char32_t c) {
    switch (c) {
        case U'c': case U'd': case U'e': case U'g': case U'h':
        case U'k': case U'm': case U'n': case U'r': case U't':
            return true;
        default:
            return false;
    }
}

struct Stem {
    u32string w;
    size_t p1 = 0;
    size_t p2 = 0;
    bool y_marked = false;

    bool ends(u32string_view suf) const {
        return w.size() >= suf.size() &&
               u32string_view(w).substr(w.size() - suf.size()) == suf;
    }

    // Suffix start position for an ends() that just succeeded.
    size_t start_of(u32string_view suf) const { return w.size() - suf.size(); }

    bool in_r1(size_t pos) const { return pos >= p1; }
    bool in_r2(size_t pos) const { return pos >= p2; }

    bool has_vowel_before(size_t end) const {
        for (size_t i = 0; i < end; ++i)
            if (is_vowel(w[i])) return true;
        return false;
    }

    void replace_suffix(size_t suffix_len, u32string_view repl) {
        w.replace(w.size() - suffix_len, suffix_len, repl);
    }

    // Short syllable ending at position `end` (exclusive): either
    // non-vowel / vowel / non-vowel-other-than-w-x-Y, or a leading
    // vowel / non-vowel pair when end == 2.
    bool short_syllable_at(size_t end) const {
        if (end >= 3 && !is_vowel(w[end - 1]) && w[end - 1] != U'w' &&
            w[end - 1] != U'x' && w[end - 1] != U'Y' && is_vowel(w[end - 2]) &&
            !is_vowel(w[end - 3]))
            return true;
        return end == 2 && is_vowel(w[0]) && !is_vowel(w[1]);
    }

    bool is_short_word() const {
        return p1 >= w.size() && short_syllable_at(w.size());
    }
};

// Irregular forms handled before the main algorithm.
bool apply_exceptional_form(u32string& w) {
    static constexpr std::pair<u32string_view, u32string_view> kMapped[] = {
        {U"skis", U"ski"},     {U"skies", U"sky"},   {U"dying", U"die"},
        {U"lying", U"lie"},    {U"tying", U"tie"},   {U"idly", U"idl"},
        {U"gently", U"gentl"}, {U"ugly", U"ugli"},   {U"early", U"earli"},
        {U"only", U"onli"},    {U"singly", U"singl"},
    };
    static constexpr u32string_view kInvariant[] = {
        U"sky", U"news", U"howe", U"atlas", U"cosmos", U"bias", U"andes",
    };
    for (const auto& [from, to] : kMapped) {
        if (w == from) {
            w = to;
            return true;
        }
    }
    for (const auto& inv : kInvariant)
        if (w == inv) return true;
    return false;
}

// Words stopped right after step 1a.
bool is_post_1a_invariant(const u32string& w) {
    static constexpr u32string_view kForms[] = {
        U"inning",  U"outing", U"canning", U"herring",
        U"earring", U"proceed", U"exceed", U"succeed",
    };
    for (const auto& f : kForms)
        if (w == f) return true;
    return false;
}

void prelude(Stem& s) {
    if (!s.w.empty() && s.w[0] == U'\'') s.w.erase(0, 1);
    if (!s.w.empty() && s.w[0] == U'y') {
        s.w[0] = U'Y';
        s.y_marked = true;
    }
    for (size_t i = 1; i < s.w.size(); ++i) {
        if (s.w[i] == U'y' && is_vowel(s.w[i - 1])) {
            s.w[i] = U'Y';
            s.y_marked = true;
        }
    }
}

void mark_regions(Stem& s) {
    const size_t n = s.w.size();
    s.p1 = n;
    s.p2 = n;
    size_t cursor = 0;
    // Words with these openings take R1 immediately after the prefix.
    for (u32string_view prefix : {U"gener", U"commun", U"arsen"}) {
        if (u32string_view(s.w).substr(0, prefix.size()) == prefix) {
            cursor = prefix.size();
            break;
        }
    }
    if (cursor == 0) {
        while (cursor < n && !is_vowel(s.w[cursor])) ++cursor;
        while (cursor < n && is_vowel(s.w[cursor])) ++cursor;
        if (cursor == n) return;  // p1 = p2 = end
    }
    s.p1 = cursor;
    while (cursor < n && !is_vowel(s.w[cursor])) ++cursor;
    while (cursor < n && is_vowel(s.w[cursor])) ++cursor;
    if (cursor == n) return;
    // One step past the first non-vowel after a vowel.
    s.p2 = cursor;
}

void step_0(Stem& s) {
    for (u32string_view suf : {U"'s'", U"'s", U"'"}) {
        if (s.ends(suf)) {
            s.w.resize(s.w.size() - suf.size());
            return;
        }
    }
}

void step_1a(Stem& s) {
    if (s.ends(U"sses")) {
        s.replace_suffix(4, U"ss");
        return;
    }
    if (s.ends(U"ied") || s.ends(U"ies")) {
        s.replace_suffix(3, s.w.size() >= 5 ? U"i" : U"ie");
        return;
    }
    if (s.ends(U"us") || s.ends(U"ss")) return;
    if (s.ends(U"s")) {
        // Delete only when a vowel precedes the character before the s.
        if (s.w.size() >= 3 && s.has_vowel_before(s.w.size() - 2))
            s.w.pop_back();
    }
}

void step_1b(Stem& s) {
    if (s.ends(U"eedly") || s.ends(U"eed")) {
        const size_t len = s.ends(U"eedly") ? 5 : 3;
        if (s.in_r1(s.w.size() - len)) s.replace_suffix(len, U"ee");
        return;
    }
    size_t len = 0;
    if (s.ends(U"ingly") || s.ends(U"edly"))
        len = s.ends(U"ingly") ? 5 : 4;
    else if (s.ends(U"ing"))
        len = 3;
    else if (s.ends(U"ed"))
        len = 2;
    if (len == 0) return;
    if (!s.has_vowel_before(s.w.size() - len)) return;
    s.w.resize(s.w.size() - len);
    if (s.ends(U"at") || s.ends(U"bl") || s.ends(U"iz")) {
        s.w.push_back(U'e');
    } else if (s.w.size() >= 2 && s.w[s.w.size() - 1] == s.w[s.w.size() - 2] &&
               is_double_consonant(s.w.back())) {
        s.w.pop_back();
    } else if (s.w.size() == s.p1 && s.short_syllable_at(s.w.size())) {
        s.w.push_back(U'e');
    }
}

void step_1c(Stem& s) {
    const size_t n = s.w.size();
    if (n >= 3 && (s.w[n - 1] == U'y' || s.w[n - 1] == U'Y') &&
        !is_vowel(s.w[n - 2]))
        s.w[n - 1] = U'i';
}

struct SuffixRule {
    u32string_view suffix;
    u32string_view replacement;
};

void step_2(Stem& s) {
    static constexpr SuffixRule kRules[] = {
        {U"ization", U"ize"}, {U"ational", U"ate"}, {U"fulness", U"ful"},
        {U"ousness", U"ous"}, {U"iveness", U"ive"}, {U"tional", U"tion"},
        {U"biliti", U"ble"},  {U"lessli", U"less"}, {U"entli", U"ent"},
        {U"fulli", U"ful"},   {U"ation", U"ate"},   {U"alism", U"al"},
        {U"aliti", U"al"},    {U"ousli", U"ous"},   {U"iviti", U"ive"},
        {U"enci", U"ence"},   {U"anci", U"ance"},   {U"abli", U"able"},
        {U"izer", U"ize"},    {U"ator", U"ate"},    {U"alli", U"al"},
        {U"bli", U"ble"},
    };
    for (const auto& r : kRules) {
        if (!s.ends(r.suffix)) continue;
        if (s.in_r1(s.start_of(r.suffix)))
            s.replace_suffix(r.suffix.size(), r.replacement);
        return;  // longest match decides; no shorter retry
    }
    if (s.ends(U"ogi")) {
        const size_t pos = s.start_of(U"ogi");
        if (s.in_r1(pos) && pos >= 1 && s.w[pos - 1] == U'l')
            s.replace_suffix(3, U"og");
        return;
    }
    if (s.ends(U"li")) {
        const size_t pos = s.start_of(U"li");
        if (s.in_r1(pos) && pos >= 1 && is_valid_li_ending(s.w[pos - 1]))
            s.w.resize(pos);
    }
}

void step_3(Stem& s) {
    static constexpr SuffixRule kRules[] = {
        {U"ational", U"ate"}, {U"tional", U"tion"}, {U"alize", U"al"},
        {U"icate", U"ic"},    {U"iciti", U"ic"},    {U"ical", U"ic"},
        {U"ness", U""},       {U"ful", U""},
    };
    if (s.ends(U"ative")) {
        // Longer than ical/ness/ful and distinct from the others; deletion
        // additionally requires R2.
        const size_t pos = s.start_of(U"ative");
        if (s.in_r1(pos) && s.in_r2(pos)) s.w.resize(pos);
        return;
    }
    for (const auto& r : kRules) {
        if (!s.ends(r.suffix)) continue;
        if (s.in_r1(s.start_of(r.suffix)))
            s.replace_suffix(r.suffix.size(), r.replacement);
        return;
    }
}

void step_4(Stem& s) {
    static constexpr u32string_view kSuffixes[] = {
        U"ement", U"ance", U"ence", U"able", U"ible", U"ment",
        U"ant",   U"ent",  U"ism",  U"ate",  U"iti",  U"ous",
        U"ive",   U"ize",  U"al",   U"er",   U"ic",
    };
    if (s.ends(U"ement")) {
        if (s.in_r2(s.start_of(U"ement"))) s.w.resize(s.w.size() - 5);
        return;
    }
    if (s.ends(U"ion")) {
        const size_t pos = s.start_of(U"ion");
        if (s.in_r2(pos) && pos >= 1 && (s.w[pos - 1] == U's' || s.w[pos - 1] == U't'))
            s.w.resize(pos);
        return;
    }
    for (const auto& suf : kSuffixes) {
        if (!s.ends(suf)) continue;
        if (s.in_r2(s.start_of(suf))) s.w.resize(s.w.size() - suf.size());
        return;
    }
}

void step_5(Stem& s) {
    const size_t n = s.w.size();
    if (n >= 1 && s.w[n - 1] == U'e') {
        const size_t pos = n - 1;
        if (s.in_r2(pos) || (s.in_r1(pos) && !s.short_syllable_at(pos)))
            s.w.pop_back();
        return;
    }
    if (n >= 2 && s.w[n - 1] == U'l' && s.w[n - 2] == U'l' && s.in_r2(n - 1))
        s.w.pop_back();
}

void postlude(Stem& s) {
    if (!s.y_marked) return;
    for (char32_t& c : s.w)
        if (c == U'Y') c = U'y';
}

}  // namespace

std::string stem_english(std::string_view word) {
    u32string w;
    if (!decode(word, w)) return std::string(word);
    if (w.size() <= 2) return std::string(word);
    if (apply_exceptional_form(w)) return encode(w);

    Stem s{std::move(w)};
    prelude(s);
    mark_regions(s);
    step_0(s);
    step_1a(s);
    if (!is_post_1a_invariant(s.w)) {
        step_1b(s);
        step_1c(s);
        step_2(s);
        step_3(s);
        step_4(s);
        step_5(s);
    }
    postlude(s);
    return encode(s.w);
}

}  // namespace sparselex
