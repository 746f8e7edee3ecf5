#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace claimforge {

// Delimiter-tagged grammars emitted by the generation prompts. Parsers here
// never throw on arbitrary bytes; malformed regions are skipped and counted,
// and every input byte is accounted to either a recovered or a dropped span.

enum class Tag {
    fact,
    reasoning,
    unverifiable,
    unverifiable_reason,
    falsified,
    false_reason,
    error_type,
};

std::string_view tag_open(Tag t);   // e.g. "<BEGINFACT>"
std::string_view tag_close(Tag t);  // e.g. "<ENDFACT>"

struct TagBlock {
    Tag tag;
    std::string body;  // trimmed; contains no known tag markers

    bool operator==(const TagBlock &) const = default;
};

// True when the body contains no known open/close marker of any tag grammar.
bool body_is_clean(std::string_view body);

// A content block (fact / unverifiable / falsified) plus its reasoning block.
// Reasoning may be absent (empty body) when the model omitted it; falsified
// pairs may carry the echoed error type.
struct ClaimPair {
    TagBlock content;
    TagBlock reasoning;
    std::optional<std::string> error_type;  // lowercased body of <BEGINERRORTYPE>
    size_t offset = 0;                      // byte offset of the content open tag

    bool operator==(const ClaimPair &) const = default;
};

struct MalformedSpan {
    size_t offset = 0;
    size_t length = 0;
    std::string reason;
};

struct ClaimParse {
    std::vector<ClaimPair> pairs;
    bool not_possible = false;  // <NOT_POSSIBLE> sentinel seen anywhere
    std::vector<MalformedSpan> malformed;
    size_t recovered_bytes = 0;
    size_t dropped_bytes = 0;  // recovered + dropped == input size, always

    // The empty-result error condition: nothing usable came back.
    bool empty() const { return pairs.empty() && !not_possible; }
};

ClaimParse parse_claim_blocks(std::string_view raw);

// Entity-relation triples: "(s <TUPLEDELIM> o <TUPLEDELIM> r)" entries,
// groups separated by <GROUPDELIM>. Components are normalized on parse.
struct Triple {
    std::string subject;
    std::string object;
    std::string relation;

    auto operator<=>(const Triple &) const = default;
};

struct TripleGroup {
    std::vector<Triple> triples;

    bool operator==(const TripleGroup &) const = default;
};

struct TripleParse {
    std::vector<TripleGroup> groups;
    size_t dropped = 0;  // malformed triple entries
};

TripleParse parse_triples(std::string_view raw);

// lowercase, trim, collapse internal whitespace runs to a single underscore
std::string normalize_entity(std::string_view s);

// Argument groups: <BEGIN_GROUP_CLAIM> <STARTCLAIM>..<ENDCLAIM> followed by
// premise blocks. The relation may sit inside the premise block (canonical),
// lack its closing marker, or follow the premise block; all three are
// accepted since judge models emit all of them.
enum class Polarity {
    supports,
    opposes,
};

std::string to_string(Polarity p);

struct Premise {
    std::string text;
    Polarity relation;

    bool operator==(const Premise &) const = default;
};

struct ArgumentBlock {
    std::string claim;
    std::vector<Premise> premises;

    bool operator==(const ArgumentBlock &) const = default;
};

struct ArgumentParse {
    std::vector<ArgumentBlock> blocks;
    size_t dropped_premises = 0;  // bad relation text or unterminated block
    size_t dropped_groups = 0;    // missing/empty claim or missing group close
};

ArgumentParse parse_argument_blocks(std::string_view raw);

// Binary verdicts: first standalone yes/no token (case-insensitive) within
// the first 16 whitespace tokens of the response.
enum class Verdict {
    yes,
    no,
    unparseable,
};

std::string to_string(Verdict v);

Verdict parse_verdict(std::string_view raw);

// Canonical serializers; parse(serialize(x)) == x for valid values.
std::string serialize_claim_pairs(const std::vector<ClaimPair> & pairs);
std::string serialize_triples(const std::vector<TripleGroup> & groups);
std::string serialize_argument_blocks(const std::vector<ArgumentBlock> & blocks);

// Rewrites every known marker "<X>" as "[X]" so free text can be embedded in
// prompts without confusing downstream parsing.
std::string neutralize_tags(std::string_view s);

inline constexpr std::string_view kNotPossible = "<NOT_POSSIBLE>";
inline constexpr std::string_view kTupleDelim = "<TUPLEDELIM>";
inline constexpr std::string_view kGroupDelim = "<GROUPDELIM>";

}  // namespace claimforge
