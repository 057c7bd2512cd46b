#pragma once

// Minimal WordNet (WNDB 3.x) reader: synsets, their lemmas, and the
// hypernym / similar-to edges used for word distances.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dmem {

struct Synset {
    std::string key;  // pos letter + offset, e.g. "n09450163"
    std::vector<std::string> lemmas;  // lowercase, '_' for spaces
};

class SemanticNet {
public:
    SemanticNet() = default;

    // Reads index.<pos> / data.<pos> for noun (required), verb, adj, adv.
    // Throws LoadError for missing files, ParseError for malformed lines.
    static SemanticNet load(const std::filesystem::path& dir);

    std::size_t synset_count() const { return synsets_.size(); }
    const std::vector<Synset>& synsets() const { return synsets_; }
    // Outgoing hypernym (noun/verb) or similar-to (adjective) edges.
    const std::vector<std::size_t>& edges(std::size_t synset) const { return edges_[synset]; }
    std::optional<std::size_t> find_synset(std::string_view key) const;

    // Synset indices containing the lemma; case-insensitive, spaces or '_'.
    const std::vector<std::size_t>& synsets_of(std::string_view word) const;
    bool contains(std::string_view word) const { return !synsets_of(word).empty(); }

    // Shortest path length in the undirected edge graph, minimised over all
    // synset pairs of the two words. 0 for equal words or a shared synset,
    // nullopt when either word is unknown or no path exists.
    std::optional<std::size_t> distance(std::string_view w1, std::string_view w2) const;

private:
    friend class WndbLoader;

    std::vector<Synset> synsets_;
    std::vector<std::vector<std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> undirected_;
    std::unordered_map<std::string, std::size_t> by_key_;
    std::unordered_map<std::string, std::vector<std::size_t>> lemma_index_;
};

std::string normalize_lemma(std::string_view word);

}  // namespace dmem
