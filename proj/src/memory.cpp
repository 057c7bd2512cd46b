#include "dmem/memory.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "dmem/errors.hpp"

namespace dmem {

void EncodingConfig::validate() const {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("tau must be > 0");
    if (min_span_ms < 0) throw ConfigError("min_span_ms must be >= 0");
}

bool should_start_episode(Millis phi_f, Millis phi_l, Millis phi_c, const EncodingConfig& cfg) {
    if (phi_f > phi_l || phi_l > phi_c) {
        throw OrderingError("timestamps out of order: phi_f=" + std::to_string(phi_f) +
                            " phi_l=" + std::to_string(phi_l) + " phi_c=" + std::to_string(phi_c));
    }
    const auto span = std::max(phi_l - phi_f, cfg.min_span_ms);
    return static_cast<double>(phi_c - phi_l) >= cfg.tau * static_cast<double>(span);
}

EpisodicMemory::EpisodicMemory(EncodingConfig cfg) { set_config(cfg); }

void EpisodicMemory::set_config(const EncodingConfig& cfg) {
    cfg.validate();
    config_ = cfg;
}

InstanceId EpisodicMemory::encode(NodeSketch sketch, Millis now) {
    if (sketch.primary.empty()) throw EmptyPrimary();

    bool open_episode = episodes_.empty();
    if (!open_episode) {
        const auto& current = episodes_.back();
        const Millis phi_f = current.timestamp;
        const Millis phi_l = current.instances.empty() ? phi_f : current.instances.back().timestamp;
        if (now < phi_l) {
            throw OrderingError("instance at " + std::to_string(now) +
                                " precedes last instance at " + std::to_string(phi_l));
        }
        open_episode = should_start_episode(phi_f, phi_l, now, config_);
    }

    if (open_episode) {
        Episode ep;
        ep.id = EpisodeId{next_id()};
        ep.timestamp = now;
        if (!episodes_.empty()) episodes_.back().next = ep.id;
        episodes_.push_back(std::move(ep));
    }

    auto& ep = episodes_.back();
    Instance inst;
    inst.id = InstanceId{next_id()};
    inst.episode_id = ep.id;
    inst.sketch = std::move(sketch);
    inst.timestamp = now;
    inst.last_touch = now;
    if (!ep.instances.empty()) ep.instances.back().next = inst.id;
    index_.emplace(inst.id, std::pair{episodes_.size() - 1, ep.instances.size()});
    ep.instances.push_back(std::move(inst));
    return ep.instances.back().id;
}

const Instance* EpisodicMemory::find(InstanceId id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return nullptr;
    return &episodes_[it->second.first].instances[it->second.second];
}

Instance* EpisodicMemory::find(InstanceId id) {
    return const_cast<Instance*>(std::as_const(*this).find(id));
}

const Instance& EpisodicMemory::at(InstanceId id) const {
    const auto* inst = find(id);
    if (inst == nullptr) throw Error("no instance with id " + std::to_string(raw(id)));
    return *inst;
}

Instance& EpisodicMemory::at(InstanceId id) {
    return const_cast<Instance&>(std::as_const(*this).at(id));
}

std::vector<InstanceId> EpisodicMemory::chronological() const {
    std::vector<InstanceId> out;
    out.reserve(index_.size());
    for (const auto& ep : episodes_) {
        for (const auto& inst : ep.instances) out.push_back(inst.id);
    }
    return out;
}

std::optional<InstanceId> EpisodicMemory::latest() const {
    for (auto ep = episodes_.rbegin(); ep != episodes_.rend(); ++ep) {
        if (!ep->instances.empty()) return ep->instances.back().id;
    }
    return std::nullopt;
}

Millis EpisodicMemory::latest_time() const {
    Millis t = 0;
    for (const auto& ep : episodes_) {
        t = std::max(t, ep.timestamp);
        for (const auto& inst : ep.instances) t = std::max({t, inst.timestamp, inst.last_touch});
    }
    for (const auto& l : links_) t = std::max(t, l.last_touch);
    return t;
}

const Link* EpisodicMemory::find_link(InstanceId a, InstanceId b) const {
    for (const auto& l : links_) {
        if ((l.from == a && l.to == b) || (l.from == b && l.to == a)) return &l;
    }
    return nullptr;
}

const Link* EpisodicMemory::add_link(InstanceId from, InstanceId to, Millis now) {
    if (from == to) throw Error("self link on instance " + std::to_string(raw(from)));
    if (find(from) == nullptr || find(to) == nullptr) throw Error("link endpoint does not exist");
    if (find_link(from, to) != nullptr) return nullptr;
    links_.push_back(Link{from, to, 1.0, now, now});
    return &links_.back();
}

std::size_t EpisodicMemory::remove_links_if(const std::function<bool(const Link&)>& pred) {
    return std::erase_if(links_, pred);
}

std::size_t EpisodicMemory::remove_instances_if(const std::function<bool(const Instance&)>& pred) {
    std::unordered_set<InstanceId> removed;
    for (auto& ep : episodes_) {
        std::erase_if(ep.instances, [&](const Instance& inst) {
            if (!pred(inst)) return false;
            removed.insert(inst.id);
            return true;
        });
    }
    if (removed.empty()) return 0;

    std::erase_if(links_, [&](const Link& l) { return removed.contains(l.from) || removed.contains(l.to); });
    std::erase_if(episodes_, [](const Episode& ep) { return ep.instances.empty(); });
    for (std::size_t e = 0; e < episodes_.size(); ++e) {
        auto& ep = episodes_[e];
        ep.next = e + 1 < episodes_.size() ? std::optional{episodes_[e + 1].id} : std::nullopt;
        for (std::size_t i = 0; i < ep.instances.size(); ++i) {
            ep.instances[i].next =
                i + 1 < ep.instances.size() ? std::optional{ep.instances[i + 1].id} : std::nullopt;
        }
    }
    reindex();
    return removed.size();
}

InteractionGraph EpisodicMemory::interaction_graph() const {
    InteractionGraph g;
    g.vertices = chronological();
    for (std::size_t i = 1; i < g.vertices.size(); ++i) {
        g.edges.push_back({g.vertices[i - 1], g.vertices[i], GraphEdge::Kind::Chronological, 1.0});
    }
    for (const auto& l : links_) {
        g.edges.push_back({l.from, l.to, GraphEdge::Kind::Similarity, l.weight});
    }
    return g;
}

EpisodicMemory EpisodicMemory::restore(EncodingConfig cfg, std::vector<Episode> episodes,
                                       std::vector<Link> links, std::uint64_t id_counter) {
    EpisodicMemory m(cfg);
    m.episodes_ = std::move(episodes);
    m.links_ = std::move(links);
    m.id_counter_ = id_counter;
    m.reindex();
    m.check_invariants();
    return m;
}

bool EpisodicMemory::operator==(const EpisodicMemory& other) const {
    return config_ == other.config_ && episodes_ == other.episodes_ && links_ == other.links_ &&
           id_counter_ == other.id_counter_;
}

void EpisodicMemory::reindex() {
    index_.clear();
    for (std::size_t e = 0; e < episodes_.size(); ++e) {
        for (std::size_t i = 0; i < episodes_[e].instances.size(); ++i) {
            if (!index_.emplace(episodes_[e].instances[i].id, std::pair{e, i}).second) {
                throw Error("duplicate instance id " + std::to_string(raw(episodes_[e].instances[i].id)));
            }
        }
    }
}

void EpisodicMemory::check_invariants() const {
    std::set<std::uint64_t> ids;
    auto claim = [&](std::uint64_t id) {
        if (id == 0 || id > id_counter_) throw Error("identifier " + std::to_string(id) + " out of range");
        if (!ids.insert(id).second) throw Error("duplicate identifier " + std::to_string(id));
    };
    for (std::size_t e = 0; e < episodes_.size(); ++e) {
        const auto& ep = episodes_[e];
        claim(raw(ep.id));
        if (ep.instances.empty()) throw Error("episode " + std::to_string(raw(ep.id)) + " is empty");
        if (e > 0 && !(episodes_[e - 1].timestamp < ep.timestamp)) {
            throw OrderingError("episode timestamps must strictly increase");
        }
        const std::optional<EpisodeId> expected_next =
            e + 1 < episodes_.size() ? std::optional{episodes_[e + 1].id} : std::nullopt;
        if (ep.next != expected_next) throw Error("broken episode chain at " + std::to_string(raw(ep.id)));
        for (std::size_t i = 0; i < ep.instances.size(); ++i) {
            const auto& inst = ep.instances[i];
            claim(raw(inst.id));
            if (inst.episode_id != ep.id) throw Error("instance episode mismatch");
            if (inst.sketch.primary.empty()) throw EmptyPrimary();
            if (inst.timestamp < ep.timestamp || (i > 0 && inst.timestamp < ep.instances[i - 1].timestamp)) {
                throw OrderingError("instance timestamps must be non-decreasing");
            }
            const std::optional<InstanceId> expected =
                i + 1 < ep.instances.size() ? std::optional{ep.instances[i + 1].id} : std::nullopt;
            if (inst.next != expected) throw Error("broken instance chain at " + std::to_string(raw(inst.id)));
            for (const auto& t : inst.sketch.tertiary) {
                if (t.prev >= inst.sketch.secondary.size()) throw Error("tertiary prev out of range");
            }
            if (!(inst.utility >= 0.0) || !std::isfinite(inst.utility)) throw Error("invalid utility");
        }
    }
    std::set<std::pair<InstanceId, InstanceId>> pairs;
    for (const auto& l : links_) {
        if (l.from == l.to) throw Error("self link");
        if (find(l.from) == nullptr || find(l.to) == nullptr) throw Error("dangling link endpoint");
        if (!pairs.insert(std::minmax(l.from, l.to)).second) throw Error("duplicate link");
        if (!(l.weight >= 0.0) || !std::isfinite(l.weight)) throw Error("invalid link weight");
    }
}

}  // namespace dmem
