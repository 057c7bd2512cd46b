#pragma once

// Instance-to-instance similarity over the semantic net, and spontaneous
// linking of a freshly encoded instance to the latest similar one.

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "dmem/dynamics.hpp"
#include "dmem/memory.hpp"
#include "dmem/text.hpp"
#include "dmem/wordnet.hpp"

namespace dmem {

struct SimilarityConfig {
    double k = 0.5;  // primary weight
    double l = 0.3;  // secondary weight
    double m = 0.2;  // tertiary weight
    double rho = 0.55;

    void validate() const;
    bool operator==(const SimilarityConfig&) const = default;
};

struct SimilarityBreakdown {
    double eta_p = 0.0;
    double eta_s = 0.0;
    double eta_t = 0.0;
    double score = 0.0;
};

// 1/(1+d_min) over all cross pairs; 1 when both sides are empty, 0 when
// exactly one is, 0 when no pair is connected.
double tier_eta(const SemanticNet& net, std::span<const std::string> a, std::span<const std::string> b);

SimilarityBreakdown score(const SemanticNet& net, const NodeSketch& a, const NodeSketch& b,
                          const SimilarityConfig& cfg);

// Scores sketches against a shared net, memoising word distances. Safe for
// concurrent use.
class Scorer {
public:
    Scorer(const SemanticNet& net, SimilarityConfig cfg);

    const SemanticNet& net() const { return net_; }
    const SimilarityConfig& config() const { return cfg_; }

    std::optional<std::size_t> distance(const std::string& a, const std::string& b) const;
    double eta(std::span<const std::string> a, std::span<const std::string> b) const;
    SimilarityBreakdown score(const NodeSketch& a, const NodeSketch& b) const;

private:
    const SemanticNet& net_;
    SimilarityConfig cfg_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::string, std::string>, std::optional<std::size_t>> cache_;
};

struct LinkOutcome {
    std::optional<Link> link;
    std::size_t visited = 0;  // candidates scored during the backward walk
    SimilarityBreakdown breakdown;  // of the linked pair, when linked
};

// Walks backward from the instance preceding `fresh` and links it to the
// first candidate scoring above rho. On a link both instances' utilities are
// reinforced at the fresh instance's timestamp.
LinkOutcome link_if_similar(EpisodicMemory& memory, InstanceId fresh, const Scorer& scorer,
                            const DynamicsConfig& dynamics);

}  // namespace dmem
