#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dmem/dynamics.hpp"
#include "dmem/memory.hpp"
#include "dmem/similarity.hpp"

namespace dmem {

struct Config {
    EncodingConfig encoding;
    SimilarityConfig similarity;
    DynamicsConfig dynamics;
    std::string wordnet_dir;  // empty: WORDNET_DIR or the bundled mini database
    std::string tagger = "lexicon";

    void validate() const;
    bool operator==(const Config&) const = default;
};

// Keys in their canonical (serialization) order.
const std::vector<std::string_view>& config_keys();

// Assigns one key; throws ConfigError for an unknown key or bad value.
void set_config_value(Config& cfg, std::string_view key, std::string_view value);
std::string get_config_value(const Config& cfg, std::string_view key);

// key=value lines, '#' comments, blank lines ignored. Unset keys keep defaults.
Config parse_config(std::string_view text, const std::string& source = "config");
Config load_config(const std::filesystem::path& path);

// Shortest text that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view s);

}  // namespace dmem
