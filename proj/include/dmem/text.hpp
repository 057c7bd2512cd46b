#pragma once

// Text front end: sentence splitting, tokenization, POS tagging and the
// tag-table classification of tokens into primary / secondary / tertiary
// keyword tiers.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dmem {

struct TaggedToken {
    std::string surface;  // original case
    std::string tag;      // Penn Treebank tag

    bool operator==(const TaggedToken&) const = default;
};

// An adverb attached to one of the sentence's secondary keywords.
struct TertiaryEntry {
    std::size_t prev = 0;  // 0-based index into NodeSketch::secondary
    std::string word;

    bool operator==(const TertiaryEntry&) const = default;
};

// One sentence's keyword structure.
struct NodeSketch {
    std::vector<std::string> primary;
    std::vector<std::string> secondary;
    std::vector<TertiaryEntry> tertiary;

    bool empty() const { return primary.empty() && secondary.empty() && tertiary.empty(); }
    std::vector<std::string> tertiary_words() const;

    bool operator==(const NodeSketch&) const = default;
};

bool is_penn_tag(std::string_view tag);
bool is_primary_tag(std::string_view tag);
bool is_secondary_tag(std::string_view tag);
bool is_tertiary_tag(std::string_view tag);
bool is_wh_tag(std::string_view tag);

// Forms of "be"; dropped by classify() whatever their tag.
bool is_copula(std::string_view word);
// Forms of "be", "do" and "have"; dropped from questions.
bool is_auxiliary(std::string_view word);

std::string to_lower(std::string_view s);

// Splits on '.', '?' or '!' followed by whitespace or end of input. The
// delimiters are removed and each sentence is trimmed.
std::vector<std::string> split_sentences(std::string_view text);

// Tokens are maximal runs of word characters (ASCII alphanumerics and any
// non-ASCII byte); '-' and '\'' are kept when they join two word characters.
std::vector<std::string> tokenize(std::string_view sentence);

class Tagger {
public:
    virtual ~Tagger() = default;
    // Must return exactly one token per input, deterministically.
    virtual std::vector<TaggedToken> tag(std::span<const std::string> tokens) const = 0;
};

// Closed-class lexicon plus suffix rules. Unknown words fall back to NN.
class LexiconTagger final : public Tagger {
public:
    std::vector<TaggedToken> tag(std::span<const std::string> tokens) const override;
};

const Tagger& default_tagger();

std::vector<TaggedToken> tag(std::span<const std::string> tokens, const Tagger& tagger);

NodeSketch classify(std::span<const TaggedToken> tagged);

// Parses one line of `surface_TAG surface_TAG ...`. The tag is taken after
// the last underscore so surfaces may contain '_'.
std::vector<TaggedToken> parse_pretagged_line(std::string_view line, std::size_t line_no = 0);

// split -> tokenize -> tag -> classify for every sentence in text.
std::vector<NodeSketch> sketch_text(std::string_view text, const Tagger& tagger);

}  // namespace dmem
