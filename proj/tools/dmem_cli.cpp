// dmem: command-line front end for the episodic text memory.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dmem/config.hpp"
#include "dmem/errors.hpp"
#include "dmem/snapshot.hpp"
#include "dmem/system.hpp"

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string store = "memory.dmem";
    std::string config;
    std::string clock = "system";

    std::string ingest_file;
    std::optional<dmem::Millis> ingest_at;
    bool pretagged = false;

    std::string question;
    std::optional<dmem::Millis> maintain_now;
    std::string metrics_dir;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dmem::IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

dmem::Snapshot open_store(const Options& opt) {
    dmem::Snapshot snap;
    if (fs::exists(opt.store)) snap = dmem::load(opt.store);
    if (!opt.config.empty()) {
        snap.config = dmem::load_config(opt.config);
        snap.memory.set_config(snap.config.encoding);
    }
    return snap;
}

std::shared_ptr<const dmem::SemanticNet> open_net(const dmem::Config& cfg) {
    const auto dir = dmem::resolve_wordnet_dir(cfg);
    if (dir.empty() || (!fs::exists(dir) && cfg.wordnet_dir.empty())) {
        return std::make_shared<const dmem::SemanticNet>();
    }
    return std::make_shared<const dmem::SemanticNet>(dmem::SemanticNet::load(dir));
}

// Manual clock: one past the latest time the store has seen, so repeated
// invocations are deterministic and never run backwards.
dmem::Millis current_time(const Options& opt, const dmem::EpisodicMemory& memory) {
    if (opt.clock == "manual") return memory.empty() ? 0 : memory.latest_time() + 1;
    return dmem::SystemClock{}.now();
}

void print_stats(const dmem::EpisodicMemory& memory) {
    std::cout << "episodes: " << memory.episodes().size() << '\n'
              << "instances: " << memory.instance_count() << '\n'
              << "links: " << memory.links().size() << '\n';
    std::map<int, std::size_t> histogram;
    for (const auto& ep : memory.episodes()) {
        for (const auto& inst : ep.instances) ++histogram[static_cast<int>(inst.utility)];
    }
    std::cout << "utility histogram:\n";
    for (const auto& [bucket, count] : histogram) {
        std::cout << "  [" << bucket << ", " << bucket + 1 << "): " << count << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Episodic text memory: ingest sentences, ask questions, maintain the store"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--store", opt.store, "Snapshot file")->capture_default_str();
    app.add_option("--config", opt.config, "Config file (key=value)");
    app.add_option("--clock", opt.clock, "Time source")->check(CLI::IsMember({"manual", "system"}))->capture_default_str();

    auto* ingest = app.add_subcommand("ingest", "Encode a text file, one instance per sentence");
    ingest->add_option("file", opt.ingest_file, "Input text")->required();
    ingest->add_option("--at", opt.ingest_at, "Timestamp (ms) of the first sentence");
    ingest->add_flag("--pretagged", opt.pretagged, "Input lines are surface_TAG tokens");

    auto* ask = app.add_subcommand("ask", "Answer a question from memory");
    ask->add_option("question", opt.question, "Question text")->required();

    auto* stats = app.add_subcommand("stats", "Episode, instance and link counts");

    auto* maintain = app.add_subcommand("maintain", "Run forgetting: decay and prune");
    maintain->add_option("--now", opt.maintain_now, "Maintenance time (ms)");

    auto* dump = app.add_subcommand("dump", "Export metrics");
    dump->add_option("--metrics", opt.metrics_dir, "Output directory for CSV files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        auto snap = open_store(opt);
        const auto net = open_net(snap.config);
        dmem::MemorySystem system(std::move(snap), net);
        system.set_query_timing(opt.clock == "system");
        bool dirty = false;

        if (*ingest) {
            const auto text = read_file(opt.ingest_file);
            const auto start = opt.ingest_at.value_or(current_time(opt, system.memory()));
            const auto results = opt.pretagged ? system.ingest_pretagged(text, start) : system.ingest_text(text, start);
            for (const auto& r : results) {
                if (!r.instance) {
                    std::cerr << "warning: skipped sentence without primary keyword: " << r.sentence << '\n';
                    continue;
                }
                std::cout << "instance " << dmem::raw(*r.instance);
                if (r.link.link) std::cout << " linked " << dmem::raw(r.link.link->to);
                std::cout << '\n';
            }
            dirty = true;
        } else if (*ask) {
            try {
                const auto answer = system.ask(opt.question, current_time(opt, system.memory()));
                std::cout << (answer.matched_instance ? answer.text : "no answer") << '\n';
                dirty = true;
            } catch (const dmem::UnanswerableQuery& e) {
                std::cerr << e.what() << '\n';
                std::cout << "no answer\n";
            }
        } else if (*stats) {
            print_stats(system.memory());
        } else if (*maintain) {
            const auto now = opt.maintain_now.value_or(current_time(opt, system.memory()));
            const auto report = system.maintain(now);
            std::cout << "links_decayed: " << report.links_decayed << '\n'
                      << "links_severed: " << report.links_severed << '\n'
                      << "instances_deleted: " << report.instances_deleted << '\n'
                      << "utilities_decayed: " << report.utilities_decayed << '\n';
            dirty = true;
        } else if (*dump) {
            dmem::export_metrics(system.metrics(), opt.metrics_dir);
            std::cout << "wrote " << (fs::path(opt.metrics_dir) / dmem::kLinkGrowthCsv).string() << " and "
                      << (fs::path(opt.metrics_dir) / dmem::kRetrievalCsv).string() << '\n';
        }

        if (dirty) dmem::save(system.state(), opt.store);
    } catch (const dmem::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
