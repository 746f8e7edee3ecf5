#include "claimforge/tokenize.hpp"

#include "claimforge/errors.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace claimforge {

namespace {

bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Letters, digits, and any byte of a multi-byte UTF-8 sequence.
bool is_word_byte(unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;
}

std::vector<TokenSpan> word_punct_spans(std::string_view s) {
    std::vector<TokenSpan> out;
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (is_space_byte(c)) {
            ++i;
            continue;
        }
        if (is_word_byte(c)) {
            size_t start = i;
            while (i < s.size() && is_word_byte(static_cast<unsigned char>(s[i]))) {
                ++i;
            }
            out.push_back({start, i});
        } else {
            out.push_back({i, i + 1});
            ++i;
        }
    }
    return out;
}

std::vector<TokenSpan> whitespace_spans(std::string_view s) {
    std::vector<TokenSpan> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space_byte(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        size_t start = i;
        while (i < s.size() && !is_space_byte(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        if (i > start) {
            out.push_back({start, i});
        }
    }
    return out;
}

std::mutex g_registry_mutex;

std::map<std::string, Tokenizer> & registry() {
    static std::map<std::string, Tokenizer> reg = [] {
        std::map<std::string, Tokenizer> m;
        m.emplace("default", Tokenizer("default", word_punct_spans));
        m.emplace("whitespace", Tokenizer("whitespace", whitespace_spans));
        return m;
    }();
    return reg;
}

}  // namespace

const Tokenizer & tokenizer_for(const std::string & spec) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto & reg = registry();
    auto it = reg.find(spec);
    if (it == reg.end()) {
        throw ConfigError("unknown tokenizer spec '" + spec + "'");
    }
    return it->second;
}

void register_tokenizer(const std::string & spec, Tokenizer::SpanFn fn) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto & reg = registry();
    reg.erase(spec);
    reg.emplace(spec, Tokenizer(spec, std::move(fn)));
}

size_t count_tokens(std::string_view textv, const Tokenizer & tok) {
    return tok.count(textv);
}

}  // namespace claimforge
