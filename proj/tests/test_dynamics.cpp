#include <random>
#include <set>

#include "doctest.h"
#include "dmem/dynamics.hpp"
#include "dmem/errors.hpp"
#include "support.hpp"

using namespace dmem;

namespace {

const DynamicsConfig kDefaults;
constexpr double kTol = 1e-9;

NodeSketch noun(const std::string& w) { return NodeSketch{{w}, {}, {}}; }

// Two instances joined by one fresh link, all created at t = 0.
EpisodicMemory linked_pair() {
    EpisodicMemory mem;
    const auto a = mem.encode(noun("a"), 0);
    const auto b = mem.encode(noun("b"), 0);
    mem.add_link(b, a, 0);
    return mem;
}

}  // namespace

TEST_CASE("decay_link examples") {
    CHECK(decay_link(1, 0, 1, kDefaults) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(decay_link(1, 10, 1, kDefaults) == doctest::Approx(0.5).epsilon(kTol));
    CHECK(decay_link(0.2, 100, 0, kDefaults) == 0.0);
}

TEST_CASE("decay_utility examples") {
    CHECK(decay_utility(1, 0, kDefaults) == 1.0);
    CHECK(decay_utility(1, 10, kDefaults) == doctest::Approx(0.5).epsilon(kTol));
    CHECK(decay_utility(0.3, 100, kDefaults) == 0.0);
}

TEST_CASE("reinforce_link examples") {
    CHECK(reinforce_link(1, 0, 1, kDefaults) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(reinforce_link(0.5, 0, 1, kDefaults) == doctest::Approx(0.95).epsilon(kTol));
    // raw formula drops well below the previous weight; the floor keeps it
    const double raw = 0.1 * 1 - 0.95 * 5 + 0.9 * 1;
    CHECK(raw < 1.0);
    CHECK(reinforce_link(1, 5, 1, kDefaults) == 1.0);
}

TEST_CASE("reinforce_utility examples") {
    CHECK(reinforce_utility(1, 0, kDefaults, 0.55) == doctest::Approx(1.0 / 0.55).epsilon(kTol));
    CHECK(reinforce_utility(1, 0, kDefaults, 0.55) == doctest::Approx(1.8181818181818181).epsilon(kTol));
    CHECK(reinforce_utility(1, 10, kDefaults, 0.55) == doctest::Approx(1.0 / 0.55 + 0.5).epsilon(kTol));
    CHECK(reinforce_utility(9, 0, kDefaults, 0.55) == 10.0);
}

TEST_CASE("negative elapsed time") {
    CHECK_THROWS_AS(decay_link(1, -1, 1, kDefaults), TimeError);
    CHECK_THROWS_AS(decay_utility(1, -0.5, kDefaults), TimeError);
    CHECK_THROWS_AS(reinforce_link(1, -1, 1, kDefaults), TimeError);
    CHECK_THROWS_AS(reinforce_utility(1, -1, kDefaults, 0.55), TimeError);
    CHECK_THROWS_AS(kDefaults.elapsed_units(10, 5), TimeError);
    CHECK(kDefaults.elapsed_units(0, 90000) == doctest::Approx(1.5));
}

TEST_CASE("config validation") {
    CHECK_NOTHROW(kDefaults.validate());
    DynamicsConfig c;
    c.x = 1.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.alpha = -0.1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.time_unit_ms = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("clamping, monotonicity and reinforce dominance") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> span(0.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const double w = unit(rng) * 3, u = unit(rng) * 3, d1 = span(rng), d2 = span(rng);
        const double lo = std::min(d1, d2), hi = std::max(d1, d2);
        CHECK(decay_link(w, lo, u, kDefaults) >= 0.0);
        CHECK(decay_utility(u, lo, kDefaults) >= 0.0);
        CHECK(reinforce_link(w, lo, u, kDefaults) >= 0.0);
        CHECK(reinforce_utility(u, lo, kDefaults, 0.55) >= 0.0);
        CHECK(decay_link(w, hi, u, kDefaults) <= decay_link(w, lo, u, kDefaults));
        CHECK(decay_utility(u, hi, kDefaults) <= decay_utility(u, lo, kDefaults));
        CHECK(reinforce_link(w, lo, u, kDefaults) >= w);

        const double w1 = unit(rng), u1 = unit(rng);
        CHECK(reinforce_link(w1, 0, u1, kDefaults) >= decay_link(w1, 0, u1, kDefaults));
    }
}

TEST_CASE("reinforce_instance and reinforce_links_of") {
    auto mem = linked_pair();
    const auto ids = mem.chronological();
    reinforce_instance(mem.at(ids[0]), 60000, kDefaults, 0.55);
    CHECK(mem.at(ids[0]).utility == doctest::Approx(1.0 / 0.55 + 0.05));
    CHECK(mem.at(ids[0]).last_touch == 60000);
    CHECK(reinforce_links_of(mem, ids[0], 60000, kDefaults) == 1);
    CHECK(mem.links()[0].weight >= 1.0);
    CHECK(mem.links()[0].last_touch == 60000);
    CHECK(reinforce_links_of(mem, ids[1], 60000, kDefaults) == 1);
    CHECK_THROWS_AS(reinforce_instance(mem.at(ids[0]), 0, kDefaults, 0.55), TimeError);
}

TEST_CASE("maintain at creation time prunes nothing") {
    auto mem = linked_pair();
    const auto before = mem;
    const auto r = maintain(mem, 0, kDefaults);
    CHECK(r.links_severed == 0);
    CHECK(r.instances_deleted == 0);
    CHECK(r.links_decayed == 1);
    CHECK(r.utilities_decayed == 2);
    CHECK(mem.links()[0].weight == doctest::Approx(1.0));  // 0.9 * 1 + 0.1 * 1
    CHECK(mem.instance_count() == 2);
}

TEST_CASE("derived severing and deletion ages") {
    const auto& c = kDefaults;
    // single maintenance after d units: utility u0 - y*d feeds the link term
    const double link_age = (c.x * 1.0 + c.z * 1.0 - c.alpha) / (c.y * (1.0 + c.z));
    const double inst_age = (1.0 - c.beta) / c.y;
    REQUIRE(link_age < inst_age);  // the link goes first, while both ends still exist

    auto first_pruning_step = [&](auto pruned) {
        for (int d = 0; d < 1000; ++d) {
            auto mem = linked_pair();
            const auto r = maintain(mem, static_cast<Millis>(d) * c.time_unit_ms, c);
            if (pruned(r)) return d;
        }
        return -1;
    };
    const int link_step = first_pruning_step([](const MaintenanceReport& r) { return r.links_severed > 0; });
    const int inst_step = first_pruning_step([](const MaintenanceReport& r) { return r.instances_deleted > 0; });
    CHECK(std::abs(link_step - link_age) <= 1.0);
    CHECK(std::abs(inst_step - inst_age) <= 1.0);

    auto mem = linked_pair();
    const auto r = maintain(mem, static_cast<Millis>(inst_step) * c.time_unit_ms, c);
    CHECK(r.instances_deleted == 2);
    CHECK(mem.empty());
    CHECK(mem.episodes().empty());
    CHECK(mem.links().empty());
}

TEST_CASE("decay is measured from the last touch") {
    auto mem = linked_pair();
    const auto ids = mem.chronological();
    maintain(mem, 5 * 60000, kDefaults);
    maintain(mem, 10 * 60000, kDefaults);
    CHECK(mem.at(ids[0]).utility == doctest::Approx(0.5));
    CHECK(mem.at(ids[0]).last_touch == 10 * 60000);
    CHECK_THROWS_AS(maintain(mem, 60000, kDefaults), TimeError);
}

TEST_CASE("maintenance leaves a consistent memory") {
    std::mt19937 rng(31);
    for (int round = 0; round < 30; ++round) {
        EpisodicMemory mem;
        Millis t = 0;
        std::vector<InstanceId> ids;
        const auto n = 2 + rng() % 80;
        for (unsigned i = 0; i < n; ++i) {
            t += rng() % 600000;
            ids.push_back(mem.encode(noun("w"), t));
            if (ids.size() > 1 && rng() % 2 == 0) mem.add_link(ids.back(), ids[rng() % (ids.size() - 1)], t);
            if (rng() % 4 == 0) reinforce_instance(mem.at(ids[rng() % ids.size()]), t, kDefaults, 0.55);
        }
        maintain(mem, t + static_cast<Millis>(rng() % 2000000), kDefaults);

        std::set<InstanceId> live;
        for (const auto& ep : mem.episodes()) {
            REQUIRE_FALSE(ep.instances.empty());
            for (std::size_t i = 0; i < ep.instances.size(); ++i) {
                const auto& inst = ep.instances[i];
                live.insert(inst.id);
                CHECK(inst.utility >= kDefaults.beta);
                if (i + 1 < ep.instances.size()) CHECK(inst.next == ep.instances[i + 1].id);
                else CHECK_FALSE(inst.next.has_value());
            }
        }
        for (std::size_t e = 0; e < mem.episodes().size(); ++e) {
            if (e + 1 < mem.episodes().size()) CHECK(mem.episodes()[e].next == mem.episodes()[e + 1].id);
            else CHECK_FALSE(mem.episodes()[e].next.has_value());
        }
        for (const auto& l : mem.links()) {
            CHECK(l.weight >= kDefaults.alpha);
            CHECK(live.count(l.from) == 1);
            CHECK(live.count(l.to) == 1);
        }
    }
}
