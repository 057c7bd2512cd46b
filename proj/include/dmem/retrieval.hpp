#pragma once

// Deliberate retrieval: question -> query sketch -> backward scan -> answer.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmem/dynamics.hpp"
#include "dmem/memory.hpp"
#include "dmem/similarity.hpp"
#include "dmem/text.hpp"

namespace dmem {

// Throws UnanswerableQuery when no primary keyword survives.
NodeSketch query_from_question(std::string_view question, const Tagger& tagger);

struct Answer {
    std::optional<InstanceId> matched_instance;
    std::string text;
    SimilarityBreakdown score;
    std::size_t visited = 0;
};

// Scans from the latest instance backward; the first instance scoring above
// rho answers. The match is reinforced together with its incident links.
Answer deliberate_retrieve(EpisodicMemory& memory, const NodeSketch& query, const Scorer& scorer,
                           const DynamicsConfig& dynamics, Millis now);

// Primary words, then U+2014 and the secondary words, then the tertiary words
// in parentheses. Empty parts are omitted.
std::string render_answer(const Instance& instance);

struct IngestMetric {
    std::size_t episode_count = 0;
    std::size_t total_links = 0;

    bool operator==(const IngestMetric&) const = default;
};

struct QueryMetric {
    std::size_t visited = 0;
    std::int64_t elapsed_micros = 0;

    bool operator==(const QueryMetric&) const = default;
};

struct RetrievalMetrics {
    std::vector<IngestMetric> ingests;
    std::vector<QueryMetric> queries;

    void record_ingest(const EpisodicMemory& memory);
    void record_query(std::size_t visited, std::int64_t elapsed_micros);

    bool operator==(const RetrievalMetrics&) const = default;
};

inline constexpr std::string_view kLinkGrowthCsv = "link_growth.csv";
inline constexpr std::string_view kRetrievalCsv = "retrieval.csv";

// Writes link_growth.csv (episode_count,total_links) and retrieval.csv
// (query_index,visited,elapsed_micros) into dir, creating it if needed.
void export_metrics(const RetrievalMetrics& metrics, const std::filesystem::path& dir);

}  // namespace dmem
