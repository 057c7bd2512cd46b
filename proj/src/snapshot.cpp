#include "dmem/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace dmem {

namespace {

using nlohmann::json;

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    return out;
}

template <typename Id>
std::string opt_id(const std::optional<Id>& id) {
    return id ? std::to_string(raw(*id)) : "-";
}

class Reader {
public:
    Reader(const std::string& source, std::size_t line) : source_(source), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

    template <typename Int>
    Int integer(std::string_view s) const {
        Int v{};
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) fail("bad integer '" + std::string(s) + "'");
        return v;
    }

    double real(std::string_view s) const {
        try {
            return parse_double(s);
        } catch (const ConfigError&) {
            fail("bad number '" + std::string(s) + "'");
        }
    }

    template <typename Id>
    std::optional<Id> opt_id(std::string_view s) const {
        if (s == "-") return std::nullopt;
        return Id{integer<std::uint64_t>(s)};
    }

    std::vector<std::string> words(std::string_view s) const {
        try {
            auto j = json::parse(s);
            return j.get<std::vector<std::string>>();
        } catch (const json::exception& e) {
            fail(std::string("bad keyword list: ") + e.what());
        }
    }

    std::vector<TertiaryEntry> tertiary(std::string_view s) const {
        std::vector<TertiaryEntry> out;
        try {
            for (const auto& item : json::parse(s)) {
                const auto prev = item.at(0).get<std::size_t>();
                if (prev == 0) fail("tertiary prev is 1-based");
                out.push_back({prev - 1, item.at(1).get<std::string>()});
            }
        } catch (const json::exception& e) {
            fail(std::string("bad tertiary list: ") + e.what());
        }
        return out;
    }

private:
    const std::string& source_;
    std::size_t line_;
};

}  // namespace

std::string serialize(const Snapshot& snap) {
    std::ostringstream out;
    out << "DMEM\t" << kSnapshotVersion << '\n';
    for (const auto key : config_keys()) {
        out << "CFG\t" << key << '\t' << json(get_config_value(snap.config, key)).dump() << '\n';
    }
    const auto& mem = snap.memory;
    out << "COUNTER\t" << mem.id_counter() << '\n';
    for (const auto& ep : mem.episodes()) {
        out << "EP\t" << raw(ep.id) << '\t' << ep.timestamp << '\t' << opt_id(ep.next) << '\t'
            << format_double(ep.utility) << '\n';
        for (const auto& inst : ep.instances) {
            json tertiary = json::array();
            for (const auto& t : inst.sketch.tertiary) tertiary.push_back(json::array({t.prev + 1, t.word}));
            out << "IN\t" << raw(inst.id) << '\t' << raw(inst.episode_id) << '\t' << inst.timestamp << '\t'
                << opt_id(inst.next) << '\t' << format_double(inst.utility) << '\t' << inst.last_touch << '\t'
                << json(inst.sketch.primary).dump() << '\t' << json(inst.sketch.secondary).dump() << '\t'
                << tertiary.dump() << '\n';
        }
    }
    for (const auto& l : mem.links()) {
        out << "LK\t" << raw(l.from) << '\t' << raw(l.to) << '\t' << format_double(l.weight) << '\t'
            << l.created_at << '\t' << l.last_touch << '\n';
    }
    for (const auto& g : snap.metrics.ingests) out << "MG\t" << g.episode_count << '\t' << g.total_links << '\n';
    for (const auto& q : snap.metrics.queries) out << "MQ\t" << q.visited << '\t' << q.elapsed_micros << '\n';
    out << "END\n";
    return out.str();
}

Snapshot deserialize(std::string_view text, const std::string& source) {
    Config cfg;
    std::vector<Episode> episodes;
    std::vector<Link> links;
    RetrievalMetrics metrics;
    std::uint64_t counter = 0;
    bool have_header = false;
    bool have_counter = false;
    bool ended = false;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        const auto line = text.substr(start, nl - start);
        start = nl + 1;
        ++line_no;
        const Reader rd(source, line_no);
        if (ended) rd.fail("content after END");
        if (line.empty()) rd.fail("empty line");

        const auto f = split_tabs(line);
        const auto type = f[0];
        auto expect = [&](std::size_t n) {
            if (f.size() != n) rd.fail(std::string(type) + " record needs " + std::to_string(n) + " fields");
        };
        if (!have_header) {
            if (type != "DMEM") rd.fail("missing DMEM header");
            expect(2);
            const auto version = rd.integer<int>(f[1]);
            if (version != kSnapshotVersion) {
                throw VersionError(source + ": unsupported snapshot version " + std::to_string(version));
            }
            have_header = true;
        } else if (type == "CFG") {
            expect(3);
            try {
                set_config_value(cfg, f[1], json::parse(f[2]).get<std::string>());
            } catch (const json::exception& e) {
                rd.fail(std::string("bad config value: ") + e.what());
            } catch (const ConfigError& e) {
                rd.fail(e.what());
            }
        } else if (type == "COUNTER") {
            expect(2);
            counter = rd.integer<std::uint64_t>(f[1]);
            have_counter = true;
        } else if (type == "EP") {
            expect(5);
            Episode ep;
            ep.id = EpisodeId{rd.integer<std::uint64_t>(f[1])};
            ep.timestamp = rd.integer<Millis>(f[2]);
            ep.next = rd.opt_id<EpisodeId>(f[3]);
            ep.utility = rd.real(f[4]);
            episodes.push_back(std::move(ep));
        } else if (type == "IN") {
            expect(10);
            if (episodes.empty()) rd.fail("IN record before any EP record");
            Instance inst;
            inst.id = InstanceId{rd.integer<std::uint64_t>(f[1])};
            inst.episode_id = EpisodeId{rd.integer<std::uint64_t>(f[2])};
            if (inst.episode_id != episodes.back().id) rd.fail("IN record does not belong to preceding EP");
            inst.timestamp = rd.integer<Millis>(f[3]);
            inst.next = rd.opt_id<InstanceId>(f[4]);
            inst.utility = rd.real(f[5]);
            inst.last_touch = rd.integer<Millis>(f[6]);
            inst.sketch.primary = rd.words(f[7]);
            inst.sketch.secondary = rd.words(f[8]);
            inst.sketch.tertiary = rd.tertiary(f[9]);
            episodes.back().instances.push_back(std::move(inst));
        } else if (type == "LK") {
            expect(6);
            links.push_back(Link{InstanceId{rd.integer<std::uint64_t>(f[1])}, InstanceId{rd.integer<std::uint64_t>(f[2])},
                                 rd.real(f[3]), rd.integer<Millis>(f[4]), rd.integer<Millis>(f[5])});
        } else if (type == "MG") {
            expect(3);
            metrics.ingests.push_back({rd.integer<std::size_t>(f[1]), rd.integer<std::size_t>(f[2])});
        } else if (type == "MQ") {
            expect(3);
            metrics.queries.push_back({rd.integer<std::size_t>(f[1]), rd.integer<std::int64_t>(f[2])});
        } else if (type == "END") {
            expect(1);
            ended = true;
        } else {
            rd.fail("unknown record type '" + std::string(type) + "'");
        }
    }
    if (!have_header) throw ParseError(source, line_no, "empty snapshot");
    if (!ended) throw ParseError(source, line_no, "truncated snapshot: missing END");
    if (!have_counter) throw ParseError(source, line_no, "missing COUNTER record");

    try {
        cfg.validate();
        auto memory = EpisodicMemory::restore(cfg.encoding, std::move(episodes), std::move(links), counter);
        return Snapshot{std::move(cfg), std::move(memory), std::move(metrics)};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(source, line_no, std::string("inconsistent snapshot: ") + e.what());
    }
}

void save(const Snapshot& snap, const std::filesystem::path& path) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << serialize(snap);
        if (!out.flush()) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot replace " + path.string() + ": " + ec.message());
}

Snapshot load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize(ss.str(), path.string());
}

}  // namespace dmem
