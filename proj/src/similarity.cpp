#include "dmem/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dmem/errors.hpp"

namespace dmem {

namespace {

template <typename Distance>
double eta_with(std::span<const std::string> a, std::span<const std::string> b, Distance&& dist) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    std::optional<std::size_t> best;
    for (const auto& wa : a) {
        for (const auto& wb : b) {
            const auto d = dist(wa, wb);
            if (d && (!best || *d < *best)) best = d;
            if (best == 0u) return 1.0;
        }
    }
    return best ? 1.0 / (1.0 + static_cast<double>(*best)) : 0.0;
}

SimilarityBreakdown combine(double eta_p, double eta_s, double eta_t, const SimilarityConfig& cfg) {
    return {eta_p, eta_s, eta_t, cfg.k * eta_p + cfg.l * eta_s + cfg.m * eta_t};
}

}  // namespace

void SimilarityConfig::validate() const {
    if (std::abs(k + l + m - 1.0) > 1e-9) throw ConfigError("k + l + m must equal 1");
    if (!(k > l && l > m && m >= 0.0)) throw ConfigError("weights must satisfy k > l > m >= 0");
    if (!(rho > 0.0 && rho <= 1.0)) throw ConfigError("rho must lie in (0,1]");
}

double tier_eta(const SemanticNet& net, std::span<const std::string> a, std::span<const std::string> b) {
    return eta_with(a, b, [&](const std::string& x, const std::string& y) { return net.distance(x, y); });
}

SimilarityBreakdown score(const SemanticNet& net, const NodeSketch& a, const NodeSketch& b,
                          const SimilarityConfig& cfg) {
    const auto ta = a.tertiary_words();
    const auto tb = b.tertiary_words();
    return combine(tier_eta(net, a.primary, b.primary), tier_eta(net, a.secondary, b.secondary),
                   tier_eta(net, ta, tb), cfg);
}

Scorer::Scorer(const SemanticNet& net, SimilarityConfig cfg) : net_(net), cfg_(cfg) { cfg_.validate(); }

std::optional<std::size_t> Scorer::distance(const std::string& a, const std::string& b) const {
    auto x = normalize_lemma(a);
    auto y = normalize_lemma(b);
    if (x == y) return 0;
    if (y < x) std::swap(x, y);
    std::pair key{std::move(x), std::move(y)};
    {
        std::lock_guard lock(mutex_);
        if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const auto d = net_.distance(key.first, key.second);
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), d);
    return d;
}

double Scorer::eta(std::span<const std::string> a, std::span<const std::string> b) const {
    return eta_with(a, b, [this](const std::string& x, const std::string& y) { return distance(x, y); });
}

SimilarityBreakdown Scorer::score(const NodeSketch& a, const NodeSketch& b) const {
    const auto ta = a.tertiary_words();
    const auto tb = b.tertiary_words();
    return combine(eta(a.primary, b.primary), eta(a.secondary, b.secondary), eta(ta, tb), cfg_);
}

LinkOutcome link_if_similar(EpisodicMemory& memory, InstanceId fresh, const Scorer& scorer,
                            const DynamicsConfig& dynamics) {
    LinkOutcome out;
    const auto order = memory.chronological();
    const auto pos = std::find(order.begin(), order.end(), fresh);
    if (pos == order.end()) throw Error("instance " + std::to_string(raw(fresh)) + " not in memory");

    const auto& sketch = memory.at(fresh).sketch;
    const Millis now = memory.at(fresh).timestamp;
    for (auto it = std::make_reverse_iterator(pos); it != order.rend(); ++it) {
        ++out.visited;
        const auto s = scorer.score(sketch, memory.at(*it).sketch);
        if (s.score > scorer.config().rho) {
            const auto* link = memory.add_link(fresh, *it, now);
            if (link != nullptr) out.link = *link;
            out.breakdown = s;
            reinforce_instance(memory.at(fresh), now, dynamics, scorer.config().rho);
            reinforce_instance(memory.at(*it), now, dynamics, scorer.config().rho);
            break;
        }
    }
    return out;
}

}  // namespace dmem
