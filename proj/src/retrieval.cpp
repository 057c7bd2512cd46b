#include "dmem/retrieval.hpp"

#include <fstream>
#include <system_error>

#include "dmem/errors.hpp"

namespace dmem {

namespace {

std::string join(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ", ";
        out += w;
    }
    return out;
}

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

}  // namespace

NodeSketch query_from_question(std::string_view question, const Tagger& tagger) {
    std::vector<TaggedToken> kept;
    for (const auto& sentence : split_sentences(question)) {
        const auto tokens = tokenize(sentence);
        for (auto& tok : tag(tokens, tagger)) {
            if (is_wh_tag(tok.tag) || is_auxiliary(tok.surface)) continue;
            kept.push_back(std::move(tok));
        }
    }
    auto sketch = classify(kept);
    if (sketch.primary.empty()) throw UnanswerableQuery(std::string(question));
    return sketch;
}

Answer deliberate_retrieve(EpisodicMemory& memory, const NodeSketch& query, const Scorer& scorer,
                           const DynamicsConfig& dynamics, Millis now) {
    Answer answer;
    const auto order = memory.chronological();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        ++answer.visited;
        const auto s = scorer.score(query, memory.at(*it).sketch);
        if (s.score > scorer.config().rho) {
            auto& inst = memory.at(*it);
            reinforce_instance(inst, now, dynamics, scorer.config().rho);
            reinforce_links_of(memory, inst.id, now, dynamics);
            answer.matched_instance = inst.id;
            answer.text = render_answer(inst);
            answer.score = s;
            break;
        }
    }
    return answer;
}

std::string render_answer(const Instance& instance) {
    const auto& sk = instance.sketch;
    auto text = join(sk.primary);
    if (!sk.secondary.empty()) {
        text += " — " + join(sk.secondary);
        if (!sk.tertiary.empty()) text += " (" + join(sk.tertiary_words()) + ")";
    }
    return text;
}

void RetrievalMetrics::record_ingest(const EpisodicMemory& memory) {
    ingests.push_back({memory.episodes().size(), memory.links().size()});
}

void RetrievalMetrics::record_query(std::size_t visited, std::int64_t elapsed_micros) {
    queries.push_back({visited, elapsed_micros});
}

void export_metrics(const RetrievalMetrics& metrics, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    auto growth = open_csv(dir / kLinkGrowthCsv);
    growth << "episode_count,total_links\n";
    for (const auto& row : metrics.ingests) growth << row.episode_count << ',' << row.total_links << '\n';

    auto retrieval = open_csv(dir / kRetrievalCsv);
    retrieval << "query_index,visited,elapsed_micros\n";
    for (std::size_t i = 0; i < metrics.queries.size(); ++i) {
        retrieval << i << ',' << metrics.queries[i].visited << ',' << metrics.queries[i].elapsed_micros << '\n';
    }
    if (!growth.flush() || !retrieval.flush()) throw IoError("write failed under " + dir.string());
}

}  // namespace dmem
