#pragma once

#include "claimforge/tokenize.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace claimforge {

enum class Domain {
    gov_report,
    meeting,
    pubmed,
    story,
    other,
};

std::string to_string(Domain d);
Domain domain_from_string(const std::string & s);  // throws ConfigError

struct Document {
    std::string id;
    Domain domain = Domain::other;
    std::string text;
    size_t token_count = 0;  // under the tokenizer the corpus was built with
};

Document make_document(std::string id, Domain domain, std::string text, const Tokenizer & tok);

// Truncation budgets are restricted to a configured allowlist so runs can't
// silently drift from the supported context lengths.
class TruncationBudget {
  public:
    static const std::vector<size_t> & default_allowlist();  // {4096, 8192, 16384}

    explicit TruncationBudget(size_t max_tokens);
    TruncationBudget(size_t max_tokens, const std::vector<size_t> & allowlist);

    size_t max_tokens() const { return max_tokens_; }

  private:
    size_t max_tokens_;
};

// Keeps exactly the documents with token_count >= min_tokens, order preserved.
std::vector<Document> filter_corpus(const std::vector<Document> & docs, size_t min_tokens);

// Cuts to the first max_tokens tokens at a token boundary; id and domain
// preserved, token_count recomputed.
Document truncate(const Document & doc, const TruncationBudget & budget, const Tokenizer & tok);

// Ingestion manifest: one JSONL record {id, domain, path} per document.
// Paths are resolved relative to the manifest's directory. Bodies are read
// as UTF-8 plain text.
struct ManifestEntry {
    std::string id;
    Domain domain = Domain::other;
    std::filesystem::path path;
};

std::vector<ManifestEntry> read_manifest(const std::filesystem::path & manifest_path);
std::vector<Document> load_documents(const std::vector<ManifestEntry> & entries, const Tokenizer & tok);

// Corpus store: JSONL records {id, domain, text, token_count}. Counts are
// recomputed on load against the given tokenizer.
void save_corpus(const std::filesystem::path & path, const std::vector<Document> & docs);
std::vector<Document> load_corpus(const std::filesystem::path & path, const Tokenizer & tok);

}  // namespace claimforge
