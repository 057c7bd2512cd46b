#include "dmem/system.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "dmem/errors.hpp"

#ifndef DMEM_BUNDLED_WORDNET
#define DMEM_BUNDLED_WORDNET ""
#endif

namespace dmem {

Millis SystemClock::now() const {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::filesystem::path resolve_wordnet_dir(const Config& cfg) {
    if (!cfg.wordnet_dir.empty()) return cfg.wordnet_dir;
    if (const char* env = std::getenv("WORDNET_DIR"); env != nullptr && *env != '\0') return env;
    return DMEM_BUNDLED_WORDNET;
}

MemorySystem::MemorySystem(Snapshot state, std::shared_ptr<const SemanticNet> net)
    : state_(std::move(state)), net_(std::move(net)), scorer_(*net_, state_.config.similarity) {
    state_.config.validate();
    state_.memory.set_config(state_.config.encoding);
}

IngestResult MemorySystem::ingest_sketch(NodeSketch sketch, Millis now, std::string sentence) {
    IngestResult result;
    result.sentence = std::move(sentence);
    result.instance = state_.memory.encode(std::move(sketch), now);
    result.link = link_if_similar(state_.memory, *result.instance, scorer_, state_.config.dynamics);
    state_.metrics.record_ingest(state_.memory);
    return result;
}

std::vector<IngestResult> MemorySystem::ingest_text(std::string_view text, Millis start, const Tagger& tagger) {
    std::vector<IngestResult> out;
    Millis t = start;
    for (const auto& sentence : split_sentences(text)) {
        auto sketch = classify(tag(tokenize(sentence), tagger));
        if (sketch.primary.empty()) {
            out.push_back({sentence, std::nullopt, {}});
        } else {
            out.push_back(ingest_sketch(std::move(sketch), t, sentence));
        }
        ++t;
    }
    return out;
}

std::vector<IngestResult> MemorySystem::ingest_pretagged(std::string_view text, Millis start) {
    std::vector<IngestResult> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    Millis t = start;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tagged = parse_pretagged_line(line, line_no);
        if (tagged.empty()) continue;
        auto sketch = classify(tagged);
        if (sketch.primary.empty()) {
            out.push_back({line, std::nullopt, {}});
        } else {
            out.push_back(ingest_sketch(std::move(sketch), t, line));
        }
        ++t;
    }
    return out;
}

Answer MemorySystem::ask(std::string_view question, Millis now, const Tagger& tagger) {
    const auto query = query_from_question(question, tagger);
    const auto begin = std::chrono::steady_clock::now();
    auto answer = deliberate_retrieve(state_.memory, query, scorer_, state_.config.dynamics, now);
    const auto micros =
        time_queries_
            ? std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - begin).count()
            : 0;
    state_.metrics.record_query(answer.visited, micros);
    return answer;
}

MaintenanceReport MemorySystem::maintain(Millis now) {
    return dmem::maintain(state_.memory, now, state_.config.dynamics);
}

}  // namespace dmem
