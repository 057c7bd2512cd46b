#include "dmem/wordnet.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dmem/errors.hpp"
#include "dmem/text.hpp"

namespace dmem {

namespace {

struct PosFiles {
    std::string_view name;  // file suffix
    char letter;
    bool required;
};

constexpr std::array<PosFiles, 4> kPos = {{
    {"noun", 'n', true},
    {"verb", 'v', false},
    {"adj", 'a', false},
    {"adv", 'r', false},
}};

char canonical_pos(char c) { return c == 's' ? 'a' : c; }

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])) != 0) ++i;
        auto j = i;
        while (j < line.size() && std::isspace(static_cast<unsigned char>(line[j])) == 0) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool is_offset(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::size_t parse_count(std::string_view s, int base, const std::string& file, std::size_t line, const char* what) {
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw ParseError(file, line, std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

// Adjective lemmas may carry a syntactic marker: "big(a)".
std::string strip_marker(std::string_view lemma) {
    if (!lemma.empty() && lemma.back() == ')') {
        const auto open = lemma.rfind('(');
        if (open != std::string_view::npos) lemma = lemma.substr(0, open);
    }
    return to_lower(lemma);
}

struct PendingEdge {
    std::size_t from;
    std::string to_key;
    std::string file;
    std::size_t line;
};

}  // namespace

std::string normalize_lemma(std::string_view word) {
    auto out = to_lower(word);
    std::replace(out.begin(), out.end(), ' ', '_');
    return out;
}

class WndbLoader {
public:
    static SemanticNet load(const std::filesystem::path& dir) {
        namespace fs = std::filesystem;
        if (!fs::is_directory(dir)) throw LoadError("not a WordNet directory: " + dir.string());

        SemanticNet net;
        std::vector<PendingEdge> pending;
        std::vector<std::pair<fs::path, char>> indexes;
        for (const auto& pos : kPos) {
            const auto data = dir / ("data." + std::string(pos.name));
            const auto index = dir / ("index." + std::string(pos.name));
            const bool have_data = fs::is_regular_file(data);
            const bool have_index = fs::is_regular_file(index);
            if (!have_data || !have_index) {
                if (pos.required) {
                    throw LoadError("missing " + (have_data ? index : data).string());
                }
                continue;
            }
            read_data(net, data, pending);
            indexes.emplace_back(index, pos.letter);
        }

        for (const auto& e : pending) {
            const auto it = net.by_key_.find(e.to_key);
            if (it == net.by_key_.end()) {
                throw ParseError(e.file, e.line, "pointer to unknown synset " + e.to_key);
            }
            auto& out = net.edges_[e.from];
            if (std::find(out.begin(), out.end(), it->second) == out.end()) out.push_back(it->second);
        }
        net.undirected_.assign(net.synsets_.size(), {});
        for (std::size_t s = 0; s < net.edges_.size(); ++s) {
            for (auto t : net.edges_[s]) {
                net.undirected_[s].push_back(t);
                net.undirected_[t].push_back(s);
            }
        }
        for (auto& adj : net.undirected_) {
            std::sort(adj.begin(), adj.end());
            adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        }
        for (const auto& [path, letter] : indexes) check_index(net, path, letter);
        return net;
    }

private:
    static void read_data(SemanticNet& net, const std::filesystem::path& path, std::vector<PendingEdge>& pending) {
        std::ifstream in(path);
        if (!in) throw LoadError("cannot open " + path.string());
        const auto file = path.string();
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line.front() == ' ') continue;  // license header
            const auto bar = line.find(" | ");
            const auto tok = split_ws(std::string_view(line).substr(0, bar));
            if (tok.size() < 4 || !is_offset(tok[0])) {
                throw ParseError(file, line_no, "malformed synset offset");
            }
            if (tok[2].size() != 1) throw ParseError(file, line_no, "bad synset type");
            const char pos = canonical_pos(tok[2][0]);
            std::size_t at = 3;
            const auto w_cnt = parse_count(tok[at++], 16, file, line_no, "word count");
            if (tok.size() < at + 2 * w_cnt + 1) throw ParseError(file, line_no, "truncated word list");

            Synset syn;
            syn.key = std::string(1, pos) + std::string(tok[0]);
            for (std::size_t w = 0; w < w_cnt; ++w, at += 2) {
                syn.lemmas.push_back(strip_marker(tok[at]));
            }
            const auto p_cnt = parse_count(tok[at++], 10, file, line_no, "pointer count");
            if (tok.size() < at + 4 * p_cnt) throw ParseError(file, line_no, "truncated pointer list");

            const auto index = net.synsets_.size();
            if (!net.by_key_.emplace(syn.key, index).second) {
                throw ParseError(file, line_no, "duplicate synset " + syn.key);
            }
            for (std::size_t p = 0; p < p_cnt; ++p, at += 4) {
                const auto symbol = tok[at];
                const auto target = tok[at + 1];
                if (!is_offset(target) || tok[at + 2].size() != 1) {
                    throw ParseError(file, line_no, "malformed pointer offset");
                }
                const char target_pos = canonical_pos(tok[at + 2][0]);
                const bool hyper = (pos == 'n' || pos == 'v') && (symbol == "@" || symbol == "@i");
                const bool similar = pos == 'a' && symbol == "&";
                if (hyper || similar) {
                    pending.push_back({index, std::string(1, target_pos) + std::string(target), file, line_no});
                }
            }
            for (const auto& lemma : syn.lemmas) {
                auto& ids = net.lemma_index_[lemma];
                if (std::find(ids.begin(), ids.end(), index) == ids.end()) ids.push_back(index);
            }
            net.synsets_.push_back(std::move(syn));
            net.edges_.emplace_back();
        }
    }

    // index.<pos>: lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt tagsense_cnt offsets...
    static void check_index(const SemanticNet& net, const std::filesystem::path& path, char letter) {
        std::ifstream in(path);
        if (!in) throw LoadError("cannot open " + path.string());
        const auto file = path.string();
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line.front() == ' ') continue;
            const auto tok = split_ws(line);
            if (tok.size() < 4) throw ParseError(file, line_no, "truncated index entry");
            const auto synset_cnt = parse_count(tok[2], 10, file, line_no, "synset count");
            const auto p_cnt = parse_count(tok[3], 10, file, line_no, "pointer count");
            const auto first = 4 + p_cnt + 2;
            if (tok.size() != first + synset_cnt) throw ParseError(file, line_no, "synset count mismatch");
            for (auto i = first; i < tok.size(); ++i) {
                if (!is_offset(tok[i])) throw ParseError(file, line_no, "malformed synset offset");
                const auto key = std::string(1, letter) + std::string(tok[i]);
                if (!net.by_key_.contains(key)) throw ParseError(file, line_no, "index refers to unknown synset " + key);
            }
        }
    }
};

SemanticNet SemanticNet::load(const std::filesystem::path& dir) { return WndbLoader::load(dir); }

std::optional<std::size_t> SemanticNet::find_synset(std::string_view key) const {
    const auto it = by_key_.find(std::string(key));
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::size_t>& SemanticNet::synsets_of(std::string_view word) const {
    static const std::vector<std::size_t> kNone;
    const auto it = lemma_index_.find(normalize_lemma(word));
    return it == lemma_index_.end() ? kNone : it->second;
}

std::optional<std::size_t> SemanticNet::distance(std::string_view w1, std::string_view w2) const {
    const auto a = normalize_lemma(w1);
    const auto b = normalize_lemma(w2);
    if (a == b) return 0;
    const auto& from = synsets_of(a);
    const auto& to = synsets_of(b);
    if (from.empty() || to.empty()) return std::nullopt;

    // Bidirectional BFS, expanding the smaller frontier one full level at a time.
    constexpr std::uint8_t kA = 1;
    constexpr std::uint8_t kB = 2;
    std::vector<std::uint8_t> side(synsets_.size(), 0);
    std::vector<std::size_t> depth(synsets_.size(), 0);
    std::vector<std::size_t> frontier_a(from.begin(), from.end());
    std::vector<std::size_t> frontier_b;
    for (auto s : from) side[s] = kA;
    for (auto s : to) {
        if (side[s] == kA) return 0;
        side[s] = kB;
        frontier_b.push_back(s);
    }
    std::size_t depth_a = 0;
    std::size_t depth_b = 0;
    while (!frontier_a.empty() && !frontier_b.empty()) {
        const bool grow_a = frontier_a.size() <= frontier_b.size();
        auto& frontier = grow_a ? frontier_a : frontier_b;
        auto& my_depth = grow_a ? depth_a : depth_b;
        const auto mine = grow_a ? kA : kB;
        std::optional<std::size_t> best;
        std::vector<std::size_t> next;
        for (auto s : frontier) {
            for (auto t : undirected_[s]) {
                if (side[t] == mine) continue;
                if (side[t] != 0) {
                    const auto d = my_depth + 1 + depth[t];
                    if (!best || d < *best) best = d;
                    continue;
                }
                side[t] = mine;
                depth[t] = my_depth + 1;
                next.push_back(t);
            }
        }
        if (best) return best;
        ++my_depth;
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace dmem
