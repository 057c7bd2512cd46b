#pragma once

// Forgetting and consolidation of link weights and instance utilities.

#include <cstddef>

#include "dmem/memory.hpp"

namespace dmem {

struct DynamicsConfig {
    double x = 0.9;   // link weight constant
    double y = 0.05;  // forgetting constant
    double z = 0.1;   // utility constant
    double alpha = 0.1;  // links below this weight are severed
    double beta = 0.1;   // instances below this utility are deleted
    Millis time_unit_ms = 60000;
    double u_max = 10.0;

    void validate() const;
    // Elapsed time between two timestamps in configured units.
    double elapsed_units(Millis from, Millis to) const;

    bool operator==(const DynamicsConfig&) const = default;
};

struct MaintenanceReport {
    std::size_t links_decayed = 0;
    std::size_t links_severed = 0;
    std::size_t instances_deleted = 0;
    std::size_t utilities_decayed = 0;

    bool operator==(const MaintenanceReport&) const = default;
};

// max(0, x*w - y*d + z*u). Throws TimeError for d < 0.
double decay_link(double w_prev, double d_ci, double u_t, const DynamicsConfig& cfg);

// max(0, u - y*d). Throws TimeError for d < 0.
double decay_utility(double u_prev, double d_ci, const DynamicsConfig& cfg);

// (1-x)*w - (1-y)*d + (1-z)*u, never below w_prev (reinforcement must not
// weaken a link) and never below 0.
double reinforce_link(double w_prev, double d_ci, double u_t, const DynamicsConfig& cfg);

// u/rho + y*d, capped at cfg.u_max.
double reinforce_utility(double u_prev, double d_ci, const DynamicsConfig& cfg, double rho);

// Reinforces an instance's utility at `now` and marks it touched.
void reinforce_instance(Instance& inst, Millis now, const DynamicsConfig& cfg, double rho);

// Reinforces every link incident to `id` using that instance's utility.
std::size_t reinforce_links_of(EpisodicMemory& memory, InstanceId id, Millis now,
                               const DynamicsConfig& cfg);

// Idle-time pass: decays every utility, then every link (using its target's
// decayed utility), severs links below alpha and deletes instances below beta.
// Elapsed time is measured from each item's last touch, which is reset to now.
MaintenanceReport maintain(EpisodicMemory& memory, Millis now, const DynamicsConfig& cfg);

}  // namespace dmem
