#include "dmem/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dmem/errors.hpp"

namespace dmem {

namespace {

void check_elapsed(double d_ci) {
    if (d_ci < 0.0 || std::isnan(d_ci)) throw TimeError("negative elapsed time " + std::to_string(d_ci));
}

bool open_unit(double v) { return v > 0.0 && v < 1.0; }

}  // namespace

void DynamicsConfig::validate() const {
    if (!open_unit(x) || !open_unit(y) || !open_unit(z)) throw ConfigError("x, y, z must lie in (0,1)");
    if (!(alpha >= 0.0) || !(beta >= 0.0)) throw ConfigError("alpha and beta must be >= 0");
    if (time_unit_ms <= 0) throw ConfigError("time_unit_ms must be > 0");
    if (!(u_max > 0.0) || !std::isfinite(u_max)) throw ConfigError("u_max must be > 0");
}

double DynamicsConfig::elapsed_units(Millis from, Millis to) const {
    if (to < from) {
        throw TimeError("time runs backwards: " + std::to_string(from) + " -> " + std::to_string(to));
    }
    return static_cast<double>(to - from) / static_cast<double>(time_unit_ms);
}

double decay_link(double w_prev, double d_ci, double u_t, const DynamicsConfig& cfg) {
    check_elapsed(d_ci);
    if (w_prev < 0.0) throw Error("negative link weight");
    return std::max(0.0, cfg.x * w_prev - cfg.y * d_ci + cfg.z * u_t);
}

double decay_utility(double u_prev, double d_ci, const DynamicsConfig& cfg) {
    check_elapsed(d_ci);
    return std::max(0.0, u_prev - cfg.y * d_ci);
}

double reinforce_link(double w_prev, double d_ci, double u_t, const DynamicsConfig& cfg) {
    check_elapsed(d_ci);
    if (w_prev < 0.0) throw Error("negative link weight");
    const double raw = (1.0 - cfg.x) * w_prev - (1.0 - cfg.y) * d_ci + (1.0 - cfg.z) * u_t;
    return std::max({0.0, raw, w_prev});
}

double reinforce_utility(double u_prev, double d_ci, const DynamicsConfig& cfg, double rho) {
    check_elapsed(d_ci);
    if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
    return std::min(cfg.u_max, u_prev / rho + cfg.y * d_ci);
}

void reinforce_instance(Instance& inst, Millis now, const DynamicsConfig& cfg, double rho) {
    inst.utility = reinforce_utility(inst.utility, cfg.elapsed_units(inst.last_touch, now), cfg, rho);
    inst.last_touch = now;
}

std::size_t reinforce_links_of(EpisodicMemory& memory, InstanceId id, Millis now,
                               const DynamicsConfig& cfg) {
    const double u = memory.at(id).utility;
    std::size_t n = 0;
    for (auto& link : memory.mutable_links()) {
        if (link.from != id && link.to != id) continue;
        link.weight = reinforce_link(link.weight, cfg.elapsed_units(link.last_touch, now), u, cfg);
        link.last_touch = now;
        ++n;
    }
    return n;
}

MaintenanceReport maintain(EpisodicMemory& memory, Millis now, const DynamicsConfig& cfg) {
    MaintenanceReport report;
    for (const auto id : memory.chronological()) {
        auto& inst = memory.at(id);
        inst.utility = decay_utility(inst.utility, cfg.elapsed_units(inst.last_touch, now), cfg);
        inst.last_touch = now;
        ++report.utilities_decayed;
    }
    for (auto& link : memory.mutable_links()) {
        const double u = memory.at(link.to).utility;
        link.weight = decay_link(link.weight, cfg.elapsed_units(link.last_touch, now), u, cfg);
        link.last_touch = now;
        ++report.links_decayed;
    }
    report.links_severed = memory.remove_links_if([&](const Link& l) { return l.weight < cfg.alpha; });
    report.instances_deleted =
        memory.remove_instances_if([&](const Instance& inst) { return inst.utility < cfg.beta; });
    return report;
}

}  // namespace dmem
