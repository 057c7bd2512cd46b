#pragma once

// Line-oriented text snapshot of a whole memory. One record per line, fields
// separated by TAB, the record type first:
//
//   DMEM  <format_version>
//   CFG   <key> <value>                        one per config key
//   COUNTER <id_counter>
//   EP    <id> <timestamp> <next|-> <utility>
//   IN    <id> <episode> <timestamp> <next|-> <utility> <last_touch>
//         <primary> <secondary> <tertiary>      keyword lists as JSON arrays;
//                                                tertiary prev is 1-based
//   LK    <from> <to> <weight> <created_at> <last_touch>
//   MG    <episode_count> <total_links>
//   MQ    <visited> <elapsed_micros>
//   END
//
// IN records belong to the closest preceding EP record.

#include <filesystem>
#include <string>
#include <string_view>

#include "dmem/config.hpp"
#include "dmem/errors.hpp"
#include "dmem/memory.hpp"
#include "dmem/retrieval.hpp"

namespace dmem {

inline constexpr int kSnapshotVersion = 1;

class VersionError : public Error {
public:
    using Error::Error;
};

struct Snapshot {
    Config config;
    EpisodicMemory memory;
    RetrievalMetrics metrics;

    bool operator==(const Snapshot&) const = default;
};

std::string serialize(const Snapshot& snap);
Snapshot deserialize(std::string_view text, const std::string& source = "snapshot");

void save(const Snapshot& snap, const std::filesystem::path& path);
Snapshot load(const std::filesystem::path& path);

}  // namespace dmem
