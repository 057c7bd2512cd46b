#pragma once

// Episodic memory hierarchy: memory -> episodes -> instances, plus the
// similarity links that cross-connect instances.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmem/text.hpp"

namespace dmem {

using Millis = std::int64_t;

enum class InstanceId : std::uint64_t {};
enum class EpisodeId : std::uint64_t {};

constexpr std::uint64_t raw(InstanceId id) { return static_cast<std::uint64_t>(id); }
constexpr std::uint64_t raw(EpisodeId id) { return static_cast<std::uint64_t>(id); }

struct EncodingConfig {
    double tau = 0.1;
    // Replaces the episode span when it is smaller. 0 gives the bare predicate.
    Millis min_span_ms = 1000;

    void validate() const;
    bool operator==(const EncodingConfig&) const = default;
};

struct Instance {
    InstanceId id{};
    EpisodeId episode_id{};
    NodeSketch sketch;
    Millis timestamp = 0;
    std::optional<InstanceId> next;  // next instance within the same episode
    double utility = 1.0;
    Millis last_touch = 0;  // creation, last reinforcement or last maintenance

    bool operator==(const Instance&) const = default;
};

struct Episode {
    EpisodeId id{};
    Millis timestamp = 0;  // creation time, phi_f of the boundary predicate
    std::vector<Instance> instances;
    std::optional<EpisodeId> next;
    // Carried for completeness; no dynamics rule reads or writes it.
    double utility = 1.0;

    bool operator==(const Episode&) const = default;
};

struct Link {
    InstanceId from{};  // the later instance
    InstanceId to{};    // the earlier instance it was matched against
    double weight = 1.0;
    Millis created_at = 0;
    Millis last_touch = 0;

    bool operator==(const Link&) const = default;
};

// True when an instance at phi_c must open a new episode, given the current
// episode's first (phi_f) and last (phi_l) timestamps. Throws OrderingError
// unless phi_f <= phi_l <= phi_c.
bool should_start_episode(Millis phi_f, Millis phi_l, Millis phi_c, const EncodingConfig& cfg);

struct GraphEdge {
    enum class Kind { Chronological, Similarity };

    InstanceId from{};
    InstanceId to{};
    Kind kind = Kind::Chronological;
    double weight = 1.0;

    bool operator==(const GraphEdge&) const = default;
};

// Read-only view of the interaction graph: instances as vertices, chronological
// succession and similarity links as edges.
struct InteractionGraph {
    std::vector<InstanceId> vertices;
    std::vector<GraphEdge> edges;
};

class EpisodicMemory {
public:
    EpisodicMemory() = default;
    explicit EpisodicMemory(EncodingConfig cfg);

    const EncodingConfig& config() const { return config_; }
    void set_config(const EncodingConfig& cfg);

    // Appends a new instance (utility 1), opening an episode first when the
    // boundary predicate holds. Throws EmptyPrimary or OrderingError.
    InstanceId encode(NodeSketch sketch, Millis now);

    const std::vector<Episode>& episodes() const { return episodes_; }
    const std::vector<Link>& links() const { return links_; }
    std::uint64_t id_counter() const { return id_counter_; }

    std::size_t instance_count() const { return index_.size(); }
    bool empty() const { return index_.empty(); }

    const Instance* find(InstanceId id) const;
    Instance* find(InstanceId id);
    const Instance& at(InstanceId id) const;
    Instance& at(InstanceId id);

    // All instances, oldest first.
    std::vector<InstanceId> chronological() const;
    std::optional<InstanceId> latest() const;
    Millis latest_time() const;

    const Link* find_link(InstanceId a, InstanceId b) const;
    // Adds a weight-1 link between two distinct existing instances. Returns
    // nullptr if the unordered pair is already linked.
    const Link* add_link(InstanceId from, InstanceId to, Millis now);
    std::vector<Link>& mutable_links() { return links_; }
    std::size_t remove_links_if(const std::function<bool(const Link&)>& pred);

    // Deletes matching instances and their incident links, repairs the
    // instance and episode chains, and drops emptied episodes.
    std::size_t remove_instances_if(const std::function<bool(const Instance&)>& pred);

    InteractionGraph interaction_graph() const;

    // Rebuilds a memory from stored parts; validates every structural invariant.
    static EpisodicMemory restore(EncodingConfig cfg, std::vector<Episode> episodes,
                                  std::vector<Link> links, std::uint64_t id_counter);

    bool operator==(const EpisodicMemory& other) const;

private:
    std::uint64_t next_id() { return ++id_counter_; }
    void reindex();
    void check_invariants() const;

    EncodingConfig config_;
    std::vector<Episode> episodes_;
    std::vector<Link> links_;
    std::uint64_t id_counter_ = 0;
    // instance id -> (episode index, instance index)
    std::unordered_map<InstanceId, std::pair<std::size_t, std::size_t>> index_;
};

}  // namespace dmem
