#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace claimforge {

struct TokenSpan {
    size_t begin = 0;  // byte offset, inclusive
    size_t end = 0;    // byte offset, exclusive

    bool operator==(const TokenSpan &) const = default;
};

// A named, deterministic tokenizer. Counting and truncation always go through
// the same span function, so a truncated prefix re-tokenizes to exactly the
// tokens it was cut at.
class Tokenizer {
  public:
    using SpanFn = std::function<std::vector<TokenSpan>(std::string_view)>;

    Tokenizer(std::string name, SpanFn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    const std::string & name() const { return name_; }
    std::vector<TokenSpan> spans(std::string_view textv) const { return fn_(textv); }
    size_t count(std::string_view textv) const { return fn_(textv).size(); }

  private:
    std::string name_;
    SpanFn fn_;
};

// Looks up a registered tokenizer spec. Built-ins:
//   "default"    - runs of letters/digits are one token, every other
//                  non-space character is its own token; multi-byte UTF-8
//                  sequences count as letters. Approximate relative to model
//                  tokenizers, but deterministic and dependency-free.
//   "whitespace" - split on whitespace runs.
// Unknown specs throw ConfigError.
const Tokenizer & tokenizer_for(const std::string & spec);

// Extension point for custom tokenizers; re-registering a name replaces it.
void register_tokenizer(const std::string & spec, Tokenizer::SpanFn fn);

size_t count_tokens(std::string_view textv, const Tokenizer & tok);

}  // namespace claimforge
