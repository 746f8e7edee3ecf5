#include "claimforge/corpus.hpp"

#include "claimforge/errors.hpp"
#include "claimforge/jsonl.hpp"

#include <algorithm>
#include <unordered_set>

namespace claimforge {

namespace fs = std::filesystem;

std::string to_string(Domain d) {
    switch (d) {
        case Domain::gov_report: return "gov_report";
        case Domain::meeting:    return "meeting";
        case Domain::pubmed:     return "pubmed";
        case Domain::story:      return "story";
        case Domain::other:      return "other";
    }
    return "other";
}

Domain domain_from_string(const std::string & s) {
    if (s == "gov_report") return Domain::gov_report;
    if (s == "meeting")    return Domain::meeting;
    if (s == "pubmed")     return Domain::pubmed;
    if (s == "story")      return Domain::story;
    if (s == "other")      return Domain::other;
    throw ConfigError("unknown domain '" + s + "'");
}

Document make_document(std::string id, Domain domain, std::string text, const Tokenizer & tok) {
    Document doc;
    doc.id = std::move(id);
    doc.domain = domain;
    doc.token_count = tok.count(text);
    doc.text = std::move(text);
    return doc;
}

const std::vector<size_t> & TruncationBudget::default_allowlist() {
    static const std::vector<size_t> allow = {4096, 8192, 16384};
    return allow;
}

TruncationBudget::TruncationBudget(size_t max_tokens)
    : TruncationBudget(max_tokens, default_allowlist()) {}

TruncationBudget::TruncationBudget(size_t max_tokens, const std::vector<size_t> & allowlist)
    : max_tokens_(max_tokens) {
    if (max_tokens == 0) {
        throw ConfigError("truncation budget must be positive");
    }
    if (std::find(allowlist.begin(), allowlist.end(), max_tokens) == allowlist.end()) {
        throw ConfigError("truncation budget " + std::to_string(max_tokens) +
                          " not in the configured allowlist");
    }
}

std::vector<Document> filter_corpus(const std::vector<Document> & docs, size_t min_tokens) {
    if (min_tokens < 1) {
        throw ConfigError("min_tokens must be >= 1");
    }
    std::vector<Document> out;
    out.reserve(docs.size());
    for (const auto & d : docs) {
        if (d.token_count >= min_tokens) {
            out.push_back(d);
        }
    }
    return out;
}

Document truncate(const Document & doc, const TruncationBudget & budget, const Tokenizer & tok) {
    if (doc.token_count <= budget.max_tokens()) {
        return doc;
    }
    auto spans = tok.spans(doc.text);
    Document out = doc;
    if (spans.size() <= budget.max_tokens()) {
        out.token_count = spans.size();
        return out;
    }
    out.text = doc.text.substr(0, spans[budget.max_tokens() - 1].end);
    out.token_count = budget.max_tokens();
    return out;
}

std::vector<ManifestEntry> read_manifest(const fs::path & manifest_path) {
    auto rows = read_jsonl(manifest_path);
    const fs::path base = manifest_path.has_parent_path() ? manifest_path.parent_path() : fs::path(".");
    std::vector<ManifestEntry> out;
    out.reserve(rows.size());
    for (const auto & row : rows) {
        if (!row.contains("id") || !row.contains("domain") || !row.contains("path")) {
            throw ConfigError(manifest_path.string() + ": manifest record needs {id, domain, path}");
        }
        ManifestEntry e;
        e.id = row.at("id").get<std::string>();
        e.domain = domain_from_string(row.at("domain").get<std::string>());
        fs::path p = row.at("path").get<std::string>();
        e.path = p.is_absolute() ? p : base / p;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Document> load_documents(const std::vector<ManifestEntry> & entries, const Tokenizer & tok) {
    std::vector<Document> docs;
    docs.reserve(entries.size());
    std::unordered_set<std::string> seen;
    for (const auto & e : entries) {
        if (!seen.insert(e.id).second) {
            throw ConfigError("duplicate document id '" + e.id + "' in manifest");
        }
        docs.push_back(make_document(e.id, e.domain, read_file(e.path), tok));
    }
    return docs;
}

void save_corpus(const fs::path & path, const std::vector<Document> & docs) {
    std::vector<ordered_json> rows;
    rows.reserve(docs.size());
    for (const auto & d : docs) {
        rows.push_back(ordered_json{
            {"id", d.id},
            {"domain", to_string(d.domain)},
            {"text", d.text},
            {"token_count", d.token_count},
        });
    }
    write_jsonl(path, rows);
}

std::vector<Document> load_corpus(const fs::path & path, const Tokenizer & tok) {
    auto rows = read_jsonl(path);
    std::vector<Document> docs;
    docs.reserve(rows.size());
    std::unordered_set<std::string> seen;
    for (const auto & row : rows) {
        auto id = row.at("id").get<std::string>();
        if (!seen.insert(id).second) {
            throw ConfigError("duplicate document id '" + id + "' in corpus file");
        }
        docs.push_back(make_document(id,
                                     domain_from_string(row.at("domain").get<std::string>()),
                                     row.at("text").get<std::string>(), tok));
    }
    return docs;
}

}  // namespace claimforge
