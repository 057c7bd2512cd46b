#include "dmem/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dmem/errors.hpp"

namespace dmem {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

Millis parse_millis(std::string_view s) {
    Millis v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw ConfigError("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw Error("cannot format double");
    return std::string(buf, p);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw ConfigError("not a number: '" + std::string(s) + "'");
    return v;
}

void Config::validate() const {
    encoding.validate();
    similarity.validate();
    dynamics.validate();
    if (tagger != "lexicon") throw ConfigError("unknown tagger '" + tagger + "'");
}

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys = {
        "tau", "min_span_ms", "k", "l", "m", "rho", "x", "y", "z",
        "alpha", "beta", "time_unit_ms", "u_max", "wordnet", "tagger"};
    return keys;
}

void set_config_value(Config& cfg, std::string_view key, std::string_view value) {
    auto num = [&](double& field) { field = parse_double(value); };
    if (key == "tau") num(cfg.encoding.tau);
    else if (key == "min_span_ms") cfg.encoding.min_span_ms = parse_millis(value);
    else if (key == "k") num(cfg.similarity.k);
    else if (key == "l") num(cfg.similarity.l);
    else if (key == "m") num(cfg.similarity.m);
    else if (key == "rho") num(cfg.similarity.rho);
    else if (key == "x") num(cfg.dynamics.x);
    else if (key == "y") num(cfg.dynamics.y);
    else if (key == "z") num(cfg.dynamics.z);
    else if (key == "alpha") num(cfg.dynamics.alpha);
    else if (key == "beta") num(cfg.dynamics.beta);
    else if (key == "time_unit_ms") cfg.dynamics.time_unit_ms = parse_millis(value);
    else if (key == "u_max") num(cfg.dynamics.u_max);
    else if (key == "wordnet") cfg.wordnet_dir = std::string(value);
    else if (key == "tagger") cfg.tagger = std::string(value);
    else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::string get_config_value(const Config& cfg, std::string_view key) {
    if (key == "tau") return format_double(cfg.encoding.tau);
    if (key == "min_span_ms") return std::to_string(cfg.encoding.min_span_ms);
    if (key == "k") return format_double(cfg.similarity.k);
    if (key == "l") return format_double(cfg.similarity.l);
    if (key == "m") return format_double(cfg.similarity.m);
    if (key == "rho") return format_double(cfg.similarity.rho);
    if (key == "x") return format_double(cfg.dynamics.x);
    if (key == "y") return format_double(cfg.dynamics.y);
    if (key == "z") return format_double(cfg.dynamics.z);
    if (key == "alpha") return format_double(cfg.dynamics.alpha);
    if (key == "beta") return format_double(cfg.dynamics.beta);
    if (key == "time_unit_ms") return std::to_string(cfg.dynamics.time_unit_ms);
    if (key == "u_max") return format_double(cfg.dynamics.u_max);
    if (key == "wordnet") return cfg.wordnet_dir;
    if (key == "tagger") return cfg.tagger;
    throw ConfigError("unknown config key '" + std::string(key) + "'");
}

Config parse_config(std::string_view text, const std::string& source) {
    Config cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) throw ParseError(source, line_no, "expected key=value");
        try {
            set_config_value(cfg, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ParseError(source, line_no, e.what());
        }
    }
    cfg.validate();
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.string());
}

}  // namespace dmem
