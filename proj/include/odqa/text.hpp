#pragma once
// Tokenization and string normalization. Three distinct rules live here and
// are deliberately kept apart:
//   tokenize()         — index/query tokens: lowercase, split on any
//                        non-alphanumeric byte (ASCII alnum only)
//   split_words()      — passage splitting: words are runs separated by
//                        Unicode whitespace, punctuation stays attached
//   normalize_answer() — SQuAD-style exact-match normalization: lowercase,
//                        strip punctuation, drop articles, collapse spaces

#include <cctype>
#include <cstdint>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "odqa/io.hpp"

namespace odqa {

inline bool is_ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline char ascii_lower(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

// Index tokenizer. Multi-byte UTF-8 sequences act as separators, which
// approximates a standard analyzer without locale dependence.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (is_ascii_alnum(c)) {
            current.push_back(ascii_lower(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

namespace detail {

// Unicode White_Space code points.
inline bool is_unicode_space(char32_t cp) {
    switch (cp) {
        case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
        case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
        case 0x2000: case 0x2001: case 0x2002: case 0x2003: case 0x2004:
        case 0x2005: case 0x2006: case 0x2007: case 0x2008: case 0x2009:
        case 0x200A: case 0x2028: case 0x2029: case 0x202F: case 0x205F:
        case 0x3000:
            return true;
        default:
            return false;
    }
}

// Decodes one UTF-8 code point at `i`, advancing `i`. Malformed sequences
// yield the raw byte value so they behave as ordinary word characters.
inline char32_t next_codepoint(std::string_view s, std::size_t& i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
        ++i;
        return c;
    }
    int extra = 0;
    char32_t cp = 0;
    if ((c & 0xE0) == 0xC0) { extra = 1; cp = c & 0x1F; }
    else if ((c & 0xF0) == 0xE0) { extra = 2; cp = c & 0x0F; }
    else if ((c & 0xF8) == 0xF0) { extra = 3; cp = c & 0x07; }
    else { ++i; return c; }
    if (i + extra >= s.size() + 0 && i + extra + 1 > s.size()) { ++i; return c; }
    for (int k = 1; k <= extra; ++k) {
        unsigned char cc = static_cast<unsigned char>(s[i + k]);
        if ((cc & 0xC0) != 0x80) { ++i; return c; }
        cp = (cp << 6) | (cc & 0x3F);
    }
    i += extra + 1;
    return cp;
}

} // namespace detail

// Splits on Unicode whitespace; every other code point is word material.
inline std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = i;
        char32_t cp = detail::next_codepoint(text, i);
        if (detail::is_unicode_space(cp)) {
            if (!current.empty()) {
                words.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.append(text.substr(start, i - start));
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

// Lowercased alphanumeric runs joined by single dashes; used for passage ids.
inline std::string slugify(std::string_view title) {
    std::string slug;
    bool pending_dash = false;
    for (unsigned char c : title) {
        if (is_ascii_alnum(c)) {
            if (pending_dash && !slug.empty()) slug.push_back('-');
            pending_dash = false;
            slug.push_back(ascii_lower(c));
        } else {
            pending_dash = true;
        }
    }
    if (slug.empty()) slug = "article";
    return slug;
}

// SQuAD convention: lowercase, strip ASCII punctuation, drop the articles
// a/an/the, collapse whitespace runs to single spaces.
inline std::string normalize_answer(std::string_view s) {
    std::string depunct;
    depunct.reserve(s.size());
    for (unsigned char c : s) {
        if (c < 0x80 && std::ispunct(c)) continue;
        depunct.push_back(ascii_lower(c));
    }
    std::string out;
    std::string word;
    auto flush = [&] {
        if (word.empty()) return;
        if (word != "a" && word != "an" && word != "the") {
            if (!out.empty()) out.push_back(' ');
            out += word;
        }
        word.clear();
    };
    for (unsigned char c : depunct) {
        if (std::isspace(c)) flush();
        else word.push_back(static_cast<char>(c));
    }
    flush();
    return out;
}

// Answer patterns use ECMAScript syntax. A leading inline flag group is
// recognized for the common case: "(?i)" maps to icase, "(?m)" to multiline.
inline std::regex compile_answer_regex(const std::string& pattern) {
    std::string body = pattern;
    auto flags = std::regex_constants::ECMAScript;
    if (body.size() >= 4 && body[0] == '(' && body[1] == '?' &&
        body.find(':', 2) == std::string::npos) {
        auto close = body.find(')');
        if (close != std::string::npos && close > 2) {
            std::string letters = body.substr(2, close - 2);
            bool all_flags = !letters.empty();
            for (char c : letters) {
                if (c != 'i' && c != 'm') { all_flags = false; break; }
            }
            if (all_flags) {
                for (char c : letters) {
                    if (c == 'i') flags |= std::regex_constants::icase;
                    if (c == 'm') flags |= std::regex_constants::multiline;
                }
                body = body.substr(close + 1);
            }
        }
    }
    try {
        return std::regex(body, flags);
    } catch (const std::regex_error& e) {
        fail("invalid regex '" + pattern + "': " + e.what());
    }
}

} // namespace odqa
