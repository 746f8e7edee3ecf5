#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace claimforge::text {

std::string_view trim(std::string_view s);
std::string lower(std::string_view s);

// Splits on runs of ASCII whitespace; no empty pieces.
std::vector<std::string_view> split_ws(std::string_view s);

// Whitespace-delimited word count (the word rule used for summary caps and
// dataset length statistics).
size_t count_words(std::string_view s);

// First `max_words` whitespace-delimited words, cut at a word boundary.
std::string truncate_words(std::string_view s, size_t max_words);

bool starts_with_icase(std::string_view s, std::string_view prefix);

// Replaces every occurrence of `from` with `to`.
std::string replace_all(std::string s, std::string_view from, std::string_view to);

}  // namespace claimforge::text
