#pragma once

// Ties the pieces together: tagger -> encoding -> spontaneous linking, and
// question -> deliberate retrieval, with metrics recorded along the way.

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmem/config.hpp"
#include "dmem/retrieval.hpp"
#include "dmem/similarity.hpp"
#include "dmem/snapshot.hpp"
#include "dmem/text.hpp"
#include "dmem/wordnet.hpp"

namespace dmem {

class Clock {
public:
    virtual ~Clock() = default;
    virtual Millis now() const = 0;
};

class SystemClock final : public Clock {
public:
    Millis now() const override;
};

class ManualClock final : public Clock {
public:
    explicit ManualClock(Millis start = 0) : now_(start) {}
    Millis now() const override { return now_; }
    void set(Millis t) { now_ = t; }
    void advance(Millis dt) { now_ += dt; }

private:
    Millis now_;
};

// Resolves the WordNet directory: explicit config value, then the
// WORDNET_DIR environment variable, then the bundled mini database.
std::filesystem::path resolve_wordnet_dir(const Config& cfg);

struct IngestResult {
    std::string sentence;
    std::optional<InstanceId> instance;  // empty when the sentence had no primary keyword
    LinkOutcome link;
};

class MemorySystem {
public:
    MemorySystem(Snapshot state, std::shared_ptr<const SemanticNet> net);

    const Snapshot& state() const { return state_; }
    const EpisodicMemory& memory() const { return state_.memory; }
    const RetrievalMetrics& metrics() const { return state_.metrics; }
    const Config& config() const { return state_.config; }
    const Scorer& scorer() const { return scorer_; }

    // Encodes one sketch at `now` and links it. Throws EmptyPrimary.
    IngestResult ingest_sketch(NodeSketch sketch, Millis now, std::string sentence = {});

    // Sentence i of the text is stamped start + i milliseconds. Sentences
    // without a primary keyword are reported with no instance.
    std::vector<IngestResult> ingest_text(std::string_view text, Millis start,
                                          const Tagger& tagger = default_tagger());
    std::vector<IngestResult> ingest_pretagged(std::string_view text, Millis start);

    // When off, queries are recorded with elapsed_micros 0 so that runs on a
    // manual clock produce identical snapshots.
    void set_query_timing(bool on) { time_queries_ = on; }

    // Throws UnanswerableQuery.
    Answer ask(std::string_view question, Millis now, const Tagger& tagger = default_tagger());

    MaintenanceReport maintain(Millis now);

private:
    Snapshot state_;
    std::shared_ptr<const SemanticNet> net_;
    Scorer scorer_;
    bool time_queries_ = true;
};

}  // namespace dmem
