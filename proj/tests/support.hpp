#pragma once

// Test-only helpers: an independent WordNet distance oracle, a straight-line
// scorer, corpus generators and a scratch directory.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "dmem/dynamics.hpp"
#include "dmem/similarity.hpp"
#include "dmem/snapshot.hpp"
#include "dmem/text.hpp"

namespace test {

inline constexpr const char* kSunText =
    "The sun is a huge ball of gases. The Sun is mainly made up of hydrogen and helium gas. "
    "The surface of the Sun is known as the photosphere.";

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(DMEM_FIXTURE_DIR) / name;
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("dmem-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

    void write(const std::string& name, const std::string& content) const {
        std::ofstream(path_ / name, std::ios::binary) << content;
    }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Reads data.* files with a separate, deliberately naive parser and solves
// all-pairs shortest paths with Floyd-Warshall.
class OracleNet {
public:
    explicit OracleNet(const std::filesystem::path& dir) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (const char* suffix : {"noun", "verb", "adj", "adv"}) {
            std::ifstream in(dir / (std::string("data.") + suffix));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == ' ') continue;
                std::istringstream ss(line.substr(0, line.find('|')));
                std::string offset, lexfile, type, hexcount;
                ss >> offset >> lexfile >> type >> hexcount;
                const char pos = type == "s" ? 'a' : type[0];
                const std::string key = pos + offset;
                ids_.emplace(key, ids_.size());
                const int words = std::stoi(hexcount, nullptr, 16);
                for (int w = 0; w < words; ++w) {
                    std::string lemma, lex_id;
                    ss >> lemma >> lex_id;
                    if (auto p = lemma.find('('); p != std::string::npos) lemma.resize(p);
                    std::transform(lemma.begin(), lemma.end(), lemma.begin(), ::tolower);
                    lemmas_[lemma].push_back(key);
                }
                int pointers = 0;
                ss >> pointers;
                for (int p = 0; p < pointers; ++p) {
                    std::string symbol, target, target_pos, st;
                    ss >> symbol >> target >> target_pos >> st;
                    const bool keep = ((pos == 'n' || pos == 'v') && (symbol == "@" || symbol == "@i")) ||
                                      (pos == 'a' && symbol == "&");
                    if (keep) edges.emplace_back(key, (target_pos == "s" ? std::string("a") : target_pos) + target);
                }
            }
        }
        const auto n = ids_.size();
        dist_.assign(n, std::vector<std::size_t>(n, kInf));
        for (std::size_t i = 0; i < n; ++i) dist_[i][i] = 0;
        for (const auto& [a, b] : edges) {
            const auto i = ids_.at(a);
            const auto j = ids_.at(b);
            dist_[i][j] = std::min<std::size_t>(dist_[i][j], 1);
            dist_[j][i] = std::min<std::size_t>(dist_[j][i], 1);
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (dist_[i][k] != kInf && dist_[k][j] != kInf && dist_[i][k] + dist_[k][j] < dist_[i][j])
                        dist_[i][j] = dist_[i][k] + dist_[k][j];
    }

    std::size_t synset_count() const { return ids_.size(); }

    std::vector<std::string> lemmas() const {
        std::vector<std::string> out;
        for (const auto& [l, _] : lemmas_) out.push_back(l);
        return out;
    }

    std::optional<std::size_t> distance(std::string a, std::string b) const {
        std::transform(a.begin(), a.end(), a.begin(), ::tolower);
        std::transform(b.begin(), b.end(), b.begin(), ::tolower);
        if (a == b) return 0;
        const auto ia = lemmas_.find(a);
        const auto ib = lemmas_.find(b);
        if (ia == lemmas_.end() || ib == lemmas_.end()) return std::nullopt;
        std::size_t best = kInf;
        for (const auto& ka : ia->second)
            for (const auto& kb : ib->second) best = std::min(best, dist_[ids_.at(ka)][ids_.at(kb)]);
        if (best == kInf) return std::nullopt;
        return best;
    }

private:
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
    std::map<std::string, std::size_t> ids_;
    std::map<std::string, std::vector<std::string>> lemmas_;
    std::vector<std::vector<std::size_t>> dist_;
};

// Straight-line reimplementation of the weighted tier score.
inline double oracle_score(const OracleNet& net, const dmem::NodeSketch& a, const dmem::NodeSketch& b,
                           const dmem::SimilarityConfig& cfg) {
    auto eta = [&](const std::vector<std::string>& x, const std::vector<std::string>& y) {
        if (x.empty() && y.empty()) return 1.0;
        if (x.empty() || y.empty()) return 0.0;
        double best = 0.0;
        for (const auto& wx : x)
            for (const auto& wy : y)
                if (const auto d = net.distance(wx, wy)) best = std::max(best, 1.0 / (1.0 + double(*d)));
        return best;
    };
    return cfg.k * eta(a.primary, b.primary) + cfg.l * eta(a.secondary, b.secondary) +
           cfg.m * eta(a.tertiary_words(), b.tertiary_words());
}

// Synthetic words that are absent from any WordNet and that the default tagger
// reads as nouns (ending in 'a') or adjectives (ending in "ous").
inline std::string synthetic(const std::string& stem, std::size_t i, const std::string& ending) {
    std::string letters;
    do {
        letters.push_back(static_cast<char>('a' + i % 26));
        i /= 26;
    } while (i > 0);
    return stem + letters + ending;
}

struct Corpus {
    std::vector<std::string> sentences;
    std::vector<std::size_t> topic;  // topic index per sentence
    std::vector<std::string> topic_noun;
    std::vector<std::string> topic_adj;

    std::string text() const {
        std::string out;
        for (const auto& s : sentences) out += s + ". ";
        return out;
    }
};

// Every topic appears once per block of `topics` sentences, in a shuffled
// order, so consecutive mentions of a topic are at most 2*topics-1 apart.
inline Corpus recurring_corpus(std::size_t n, std::size_t topics, unsigned seed) {
    Corpus c;
    for (std::size_t t = 0; t < topics; ++t) {
        c.topic_noun.push_back(synthetic("zorb", t, "a"));
        c.topic_adj.push_back(synthetic("glim", t, "ous"));
    }
    std::mt19937 rng(seed);
    std::vector<std::size_t> block(topics);
    while (c.sentences.size() < n) {
        std::iota(block.begin(), block.end(), 0);
        std::shuffle(block.begin(), block.end(), rng);
        for (auto t : block) {
            if (c.sentences.size() == n) break;
            const auto i = c.sentences.size();
            c.sentences.push_back("The " + c.topic_noun[t] + " is " + c.topic_adj[t] + " near the " +
                                  synthetic("quil", i, "a"));
            c.topic.push_back(t);
        }
    }
    return c;
}

inline Corpus distinct_corpus(std::size_t n) {
    Corpus c;
    for (std::size_t i = 0; i < n; ++i) {
        c.topic_noun.push_back(synthetic("vemb", i, "a"));
        c.topic_adj.push_back(synthetic("drav", i, "ous"));
        c.sentences.push_back("The " + c.topic_noun[i] + " is " + c.topic_adj[i] + " near the " +
                              synthetic("tosk", i, "a"));
        c.topic.push_back(i);
    }
    return c;
}

// A reachable state built through the public operations: random encodes,
// links, reinforcements, a maintenance pass, odd config values and metrics.
inline dmem::Snapshot random_snapshot(unsigned seed) {
    using namespace dmem;
    std::mt19937 rng(seed);
    static const std::vector<std::string> words = {"sun",  "Sun",        "gas",         "naïve", "quote\"d",
                                                   "back\\slash", "tab\there", "über", "x", "long_word-with'marks"};
    Snapshot snap;
    snap.config.encoding.tau = 0.01 + (rng() % 1000) / 997.0;
    snap.config.encoding.min_span_ms = rng() % 3000;
    snap.config.similarity.rho = 0.1 + (rng() % 900) / 1000.0;
    snap.config.dynamics.y = 0.001 + (rng() % 500) / 1000.0;
    snap.config.dynamics.time_unit_ms = 1 + rng() % 100000;
    if (rng() % 2) snap.config.wordnet_dir = "/some/where with spaces/wn";

    auto& mem = snap.memory;
    mem.set_config(snap.config.encoding);
    auto pick = [&](std::size_t max) {
        std::vector<std::string> out;
        const auto n = rng() % (max + 1);
        for (std::size_t i = 0; i < n; ++i) out.push_back(words[rng() % words.size()]);
        return out;
    };
    std::vector<InstanceId> ids;
    Millis t = static_cast<Millis>(rng() % 100000) - 50000;
    const auto n = rng() % 40;
    for (unsigned i = 0; i < n; ++i) {
        t += (rng() % 5 == 0) ? rng() % 100000 : rng() % 500;
        NodeSketch s;
        s.primary = pick(3);
        s.primary.push_back(words[rng() % words.size()]);
        s.secondary = pick(2);
        if (!s.secondary.empty()) {
            for (const auto& w : pick(2)) s.tertiary.push_back({rng() % s.secondary.size(), w});
        }
        ids.push_back(mem.encode(std::move(s), t));
        if (ids.size() > 1 && rng() % 3 == 0) mem.add_link(ids.back(), ids[rng() % (ids.size() - 1)], t);
        if (rng() % 4 == 0) reinforce_instance(mem.at(ids[rng() % ids.size()]), t, snap.config.dynamics, 0.55);
        snap.metrics.record_ingest(mem);
        if (rng() % 5 == 0) snap.metrics.record_query(rng() % 50, rng() % 100000);
    }
    if (rng() % 2) maintain(mem, t + static_cast<Millis>(rng() % 1000000), snap.config.dynamics);
    return snap;
}

}  // namespace test
