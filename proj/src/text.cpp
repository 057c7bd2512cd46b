#include "dmem/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "dmem/errors.hpp"

namespace dmem {

namespace {

constexpr std::array<std::string_view, 45> kPennTags = {
    "CC",  "CD",  "DT",  "EX",  "FW",   "IN",  "JJ",  "JJR", "JJS", "LS",   "MD",    "NN",
    "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS",  "RP",    "SYM",
    "TO",  "UH",  "VB",  "VBD", "VBG",  "VBN", "VBP", "VBZ", "WDT", "WP",   "WP$",   "WRB",
    ".",   ",",   ":",   "``",  "''",   "-LRB-", "-RRB-", "#", "$"};

bool contains(std::span<const std::string_view> set, std::string_view v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

bool is_sentence_delim(char c) { return c == '.' || c == '?' || c == '!'; }

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n\f\v");
    return s.substr(first, last - first + 1);
}

// Irregular verbs: past tense -> participle, for VBD/VBN disambiguation.
struct VerbForms {
    std::string_view base;
    std::string_view past;
    std::string_view participle;
};

constexpr VerbForms kIrregular[] = {
    {"make", "made", "made"},       {"know", "knew", "known"},       {"give", "gave", "given"},
    {"take", "took", "taken"},      {"see", "saw", "seen"},          {"find", "found", "found"},
    {"build", "built", "built"},    {"hold", "held", "held"},        {"become", "became", "become"},
    {"begin", "began", "begun"},    {"bring", "brought", "brought"}, {"buy", "bought", "bought"},
    {"come", "came", "come"},       {"draw", "drew", "drawn"},       {"drink", "drank", "drunk"},
    {"drive", "drove", "driven"},   {"eat", "ate", "eaten"},         {"fall", "fell", "fallen"},
    {"feel", "felt", "felt"},       {"fly", "flew", "flown"},        {"forget", "forgot", "forgotten"},
    {"freeze", "froze", "frozen"},  {"get", "got", "gotten"},        {"go", "went", "gone"},
    {"grow", "grew", "grown"},      {"hear", "heard", "heard"},      {"keep", "kept", "kept"},
    {"lead", "led", "led"},         {"leave", "left", "left"},       {"lose", "lost", "lost"},
    {"meet", "met", "met"},         {"pay", "paid", "paid"},         {"ride", "rode", "ridden"},
    {"rise", "rose", "risen"},      {"run", "ran", "run"},           {"say", "said", "said"},
    {"sell", "sold", "sold"},       {"send", "sent", "sent"},        {"shine", "shone", "shone"},
    {"sing", "sang", "sung"},       {"sit", "sat", "sat"},           {"sleep", "slept", "slept"},
    {"speak", "spoke", "spoken"},   {"spend", "spent", "spent"},     {"stand", "stood", "stood"},
    {"swim", "swam", "swum"},       {"teach", "taught", "taught"},   {"tell", "told", "told"},
    {"think", "thought", "thought"}, {"throw", "threw", "thrown"},   {"understand", "understood", "understood"},
    {"wear", "wore", "worn"},       {"win", "won", "won"},           {"write", "wrote", "written"},
    {"bear", "bore", "born"},       {"break", "broke", "broken"},    {"choose", "chose", "chosen"},
    {"hide", "hid", "hidden"},      {"lie", "lay", "lain"},          {"shake", "shook", "shaken"},
    {"steal", "stole", "stolen"},   {"strike", "struck", "struck"},  {"weave", "wove", "woven"},
};

const std::unordered_map<std::string_view, std::string_view>& lexicon() {
    static const auto table = [] {
        std::unordered_map<std::string_view, std::string_view> t;
        auto put = [&t](std::string_view tag, std::initializer_list<std::string_view> words) {
            for (auto w : words) t.emplace(w, tag);
        };
        put("DT", {"the", "a", "an", "this", "that", "these", "those", "each", "every", "some",
                   "any", "no", "another", "either", "neither"});
        put("PDT", {"all", "both", "half"});
        put("IN", {"of",     "in",    "on",      "at",     "by",     "for",   "with",   "from",
                   "about",  "as",    "into",    "onto",   "over",   "under", "above",  "below",
                   "between", "among", "through", "during", "before", "after", "around", "across",
                   "against", "along", "behind", "beyond", "near",   "inside", "outside", "within",
                   "without", "since", "until",  "upon",   "toward", "towards", "than",  "because",
                   "if",     "while", "although", "though", "whether", "like", "via",   "per",
                   "beneath", "despite", "except", "unlike", "throughout"});
        put("CC", {"and", "or", "but", "nor", "yet", "so", "plus"});
        put("TO", {"to"});
        put("EX", {"there"});
        put("RP", {"up", "off", "out", "down", "away"});
        put("PRP", {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them",
                    "itself", "himself", "herself", "themselves", "myself", "ourselves", "yourself"});
        put("PRP$", {"my", "your", "his", "its", "our", "their"});
        put("WDT", {"which", "whatever", "whichever"});
        put("WP", {"what", "who", "whom", "whoever"});
        put("WP$", {"whose"});
        put("WRB", {"when", "where", "why", "how", "whenever", "wherever"});
        put("MD", {"can", "could", "may", "might", "must", "shall", "should", "will", "would"});
        put("VBZ", {"is", "has", "does", "contains", "orbits", "consists", "produces", "emits",
                    "rotates", "revolves", "lives", "eats", "means", "includes", "becomes",
                    "forms", "causes", "gives", "makes", "takes", "shines", "burns", "moves"});
        put("VBP", {"am", "are", "have", "do"});
        put("VBD", {"was", "were", "had", "did"});
        put("VBN", {"been"});
        put("VBG", {"being", "having", "doing"});
        put("VB", {"be"});
        put("RB", {"not",   "very",   "also",   "too",    "often",  "always", "never",  "sometimes",
                   "usually", "still", "already", "almost", "quite",  "rather", "just",   "only",
                   "even",  "again",  "soon",   "now",    "then",   "here",   "perhaps", "once",
                   "twice", "together", "else",  "ever",   "far",    "fast",   "well",   "much",
                   "mostly", "nearly", "roughly", "about"});
        put("RBR", {"more", "less", "further", "faster", "later"});
        put("RBS", {"most", "least", "best"});
        put("JJ", {"huge",   "big",    "small",  "large",  "hot",    "cold",   "warm",    "bright",
                   "dark",   "old",    "new",    "young",  "long",   "short",  "high",    "low",
                   "heavy",  "light",  "great",  "little", "many",   "few",    "red",     "blue",
                   "green",  "yellow", "white",  "black",  "solid",  "liquid", "dense",   "thin",
                   "thick",  "deep",   "wide",   "fast",   "slow",   "strong", "weak",    "main",
                   "major",  "minor",  "outer",  "inner",  "rocky",  "icy",    "giant",   "tiny",
                   "rich",   "poor",   "full",   "empty",  "round",  "flat",   "first",   "last",
                   "next",   "same",   "different", "other", "true", "false",  "good",    "bad",
                   "natural", "central", "common", "important", "visible", "nuclear", "chemical",
                   "solar",  "lunar",  "stellar", "planetary", "physical", "similar", "able",
                   "own",    "whole",  "real",  "simple", "complex", "free",   "close",
                   "such",   "certain", "several", "various", "magnetic", "metallic", "toxic",
                   "organic", "elastic", "electric", "electronic", "atomic", "gaseous", "hollow",
                   "loyal",  "cool",   "brilliant", "tall", "clear",  "wild",   "soft",    "hard",
                   "smooth", "rough",  "wet",    "dry",    "clean",  "pale",   "faint",   "vast",
                   "immense", "gigantic", "frigid", "reddish", "stony", "faithful", "dazzling", "calm",
                   "loud",   "quiet",  "brave",  "fierce", "gentle", "ancient", "rare",   "pure",
                   "fresh",  "brown",  "gray",   "grey",   "orange", "purple", "pink",    "golden"});
        put("JJR", {"bigger", "smaller", "larger", "hotter", "colder", "brighter", "older",
                    "newer", "longer", "shorter", "higher", "lower", "heavier", "lighter",
                    "greater", "denser", "closer"});
        put("JJS", {"biggest", "smallest", "largest", "hottest", "coldest", "brightest", "oldest",
                    "newest", "longest", "shortest", "highest", "lowest", "heaviest", "lightest",
                    "greatest", "densest", "closest", "nearest"});
        put("CD", {"one",   "two",   "three", "four",  "five",     "six",     "seven",
                   "eight", "nine",  "ten",   "hundred", "thousand", "million", "billion"});
        put("UH", {"yes", "oh", "hello", "hi"});
        return t;
    }();
    return table;
}

const std::unordered_map<std::string_view, const VerbForms*>& irregular_by_form() {
    static const auto table = [] {
        std::unordered_map<std::string_view, const VerbForms*> t;
        for (const auto& v : kIrregular) {
            t.emplace(v.past, &v);
            t.emplace(v.participle, &v);
        }
        return t;
    }();
    return table;
}

const std::unordered_set<std::string_view>& verb_bases() {
    static const auto set = [] {
        std::unordered_set<std::string_view> s = {
            "orbit", "contain", "consist", "produce", "emit", "rotate", "revolve", "live",
            "eat",   "mean",    "include", "form",    "cause", "shine", "burn",   "move"};
        for (const auto& v : kIrregular) s.insert(v.base);
        return s;
    }();
    return set;
}

const std::unordered_set<std::string_view>& ing_nouns() {
    static const std::unordered_set<std::string_view> s = {
        "thing",    "king",    "ring",     "string",  "spring",  "wing",    "morning",
        "evening",  "ceiling", "building", "meaning", "feeling", "painting", "clothing",
        "nothing",  "something", "anything", "everything", "lightning", "sibling"};
    return s;
}

const std::unordered_set<std::string_view>& ed_nouns() {
    static const std::unordered_set<std::string_view> s = {
        "bed", "red", "seed", "speed", "need", "hundred", "shed", "sled", "feed", "breed", "weed"};
    return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_number(std::string_view s) {
    bool digit = false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            digit = true;
        } else if (c != '.' && c != ',' && c != '-') {
            return false;
        }
    }
    return digit;
}

bool is_capitalized(std::string_view s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s.front())) != 0;
}

// Looks back over adverbs for a form of "be" or "have": "is (mainly) made".
bool follows_be_or_have(std::span<const std::string> lowered, std::size_t i) {
    for (std::size_t j = i; j-- > 0;) {
        const auto& w = lowered[j];
        if (is_copula(w) || w == "has" || w == "have" || w == "had" || w == "having") return true;
        const auto it = lexicon().find(w);
        const bool adverb = it != lexicon().end() && (it->second == "RB" || it->second == "RBS");
        if (!adverb && !(ends_with(w, "ly") && w.size() > 4)) return false;
    }
    return false;
}

std::string_view past_or_participle(std::span<const std::string> lowered, std::size_t i) {
    return follows_be_or_have(lowered, i) ? "VBN" : "VBD";
}

bool determiner_like(std::string_view tag) {
    return tag == "DT" || tag == "JJ" || tag == "PRP$" || tag == "POS" || tag == "PDT" ||
           tag == "CD" || tag == "IN";
}

}  // namespace

std::vector<std::string> NodeSketch::tertiary_words() const {
    std::vector<std::string> out;
    out.reserve(tertiary.size());
    for (const auto& t : tertiary) out.push_back(t.word);
    return out;
}

bool is_penn_tag(std::string_view tag) { return contains(kPennTags, tag); }

bool is_primary_tag(std::string_view tag) {
    return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS";
}

bool is_secondary_tag(std::string_view tag) {
    static constexpr std::array<std::string_view, 8> kTags = {"VB",  "VBD", "VBG", "VBN",
                                                              "VBP", "VBZ", "JJ",  "MD"};
    return contains(kTags, tag);
}

bool is_tertiary_tag(std::string_view tag) { return tag == "RB" || tag == "RBS"; }

bool is_wh_tag(std::string_view tag) {
    return tag == "WDT" || tag == "WP" || tag == "WP$" || tag == "WRB";
}

bool is_copula(std::string_view word) {
    static constexpr std::array<std::string_view, 8> kBe = {"be",  "am",   "is",   "are",
                                                            "was", "were", "been", "being"};
    return contains(kBe, to_lower(word));
}

bool is_auxiliary(std::string_view word) {
    static constexpr std::array<std::string_view, 8> kAux = {"do",  "does", "did",    "done",
                                                             "has", "have", "having", "had"};
    return is_copula(word) || contains(kAux, to_lower(word));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        auto s = trim(text.substr(start, end - start));
        while (!s.empty() && is_sentence_delim(s.back())) s.remove_suffix(1);
        s = trim(s);
        if (!s.empty()) out.emplace_back(s);
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!is_sentence_delim(text[i])) continue;
        const bool at_end = i + 1 == text.size();
        if (at_end || std::isspace(static_cast<unsigned char>(text[i + 1])) != 0) {
            flush(i + 1);
            start = i + 1;
        }
    }
    if (start < text.size()) flush(text.size());
    return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> out;
    std::string cur;
    const auto n = sentence.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<unsigned char>(sentence[i]);
        if (is_word_byte(c)) {
            cur.push_back(static_cast<char>(c));
            continue;
        }
        const bool joiner = (c == '-' || c == '\'') && !cur.empty() && i + 1 < n &&
                            is_word_byte(static_cast<unsigned char>(sentence[i + 1]));
        if (joiner) {
            cur.push_back(static_cast<char>(c));
            continue;
        }
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<TaggedToken> LexiconTagger::tag(std::span<const std::string> tokens) const {
    std::vector<std::string> lowered;
    lowered.reserve(tokens.size());
    for (const auto& t : tokens) lowered.push_back(to_lower(t));

    std::vector<TaggedToken> out;
    out.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto& surface = tokens[i];
        const std::string_view w = lowered[i];
        const std::string_view prev_tag = out.empty() ? std::string_view{} : out.back().tag;
        const std::string_view prev_word = i == 0 ? std::string_view{} : lowered[i - 1];

        std::string_view tag;
        if (is_number(w)) {
            tag = "CD";
        } else if (auto it = lexicon().find(w); it != lexicon().end()) {
            tag = it->second;
            if (tag == "VBZ" && determiner_like(prev_tag) && !is_copula(w) && w != "has" &&
                w != "does") {
                tag = "NNS";
            }
            if (i > 0 && is_capitalized(surface) && !is_copula(w) && tag != "DT" &&
                (tag == "JJ" || tag == "NN")) {
                tag = "NNP";
            }
        } else if (i > 0 && is_capitalized(surface)) {
            tag = "NNP";
        } else if (auto irr = irregular_by_form().find(w); irr != irregular_by_form().end()) {
            const auto& forms = *irr->second;
            if (forms.past == forms.participle) {
                tag = past_or_participle(lowered, i);
            } else if (w == forms.past) {
                tag = "VBD";
            } else if (w == forms.base) {
                tag = follows_be_or_have(lowered, i) ? "VBN" : "VB";
            } else {
                tag = "VBN";
            }
        } else if (verb_bases().contains(w)) {
            if (prev_word == "to" || prev_tag == "MD" || prev_word == "do" || prev_word == "does" ||
                prev_word == "did") {
                tag = "VB";
            } else if (determiner_like(prev_tag)) {
                tag = "NN";
            } else {
                tag = "VBP";
            }
        } else if (w.size() > 4 && ends_with(w, "ly")) {
            tag = "RB";
        } else if (w.size() > 5 &&
                   (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") ||
                    ends_with(w, "able") || ends_with(w, "ible") || ends_with(w, "less") ||
                    ends_with(w, "ical") || ends_with(w, "ish"))) {
            tag = "JJ";
        } else if (w.size() > 4 && ends_with(w, "ing") && !ing_nouns().contains(w)) {
            tag = "VBG";
        } else if (w.size() > 3 && ends_with(w, "ed") && !ed_nouns().contains(w)) {
            tag = past_or_participle(lowered, i);
        } else if (w.size() > 3 && ends_with(w, "s") && !ends_with(w, "ss") &&
                   !ends_with(w, "us") && !ends_with(w, "is")) {
            tag = "NNS";
        } else {
            tag = "NN";
        }
        out.push_back({surface, std::string(tag)});
    }
    return out;
}

const Tagger& default_tagger() {
    static const LexiconTagger tagger;
    return tagger;
}

std::vector<TaggedToken> tag(std::span<const std::string> tokens, const Tagger& tagger) {
    auto out = tagger.tag(tokens);
    if (out.size() != tokens.size()) {
        throw Error("tagger returned " + std::to_string(out.size()) + " tags for " +
                    std::to_string(tokens.size()) + " tokens");
    }
    return out;
}

NodeSketch classify(std::span<const TaggedToken> tagged) {
    struct Secondary {
        std::size_t pos;
        bool adjective;
    };

    NodeSketch sketch;
    std::vector<std::string> proper;
    std::vector<std::string> common;
    std::vector<Secondary> secondaries;
    std::vector<std::size_t> adverbs;

    for (std::size_t i = 0; i < tagged.size(); ++i) {
        const auto& tok = tagged[i];
        if (is_copula(tok.surface)) continue;
        if (tok.tag == "NNP" || tok.tag == "NNPS") {
            proper.push_back(tok.surface);
        } else if (is_primary_tag(tok.tag)) {
            common.push_back(tok.surface);
        } else if (is_secondary_tag(tok.tag)) {
            secondaries.push_back({i, tok.tag == "JJ"});
            sketch.secondary.push_back(tok.surface);
        } else if (is_tertiary_tag(tok.tag)) {
            adverbs.push_back(i);
        }
    }

    // Proper nouns lead: they name the sentence's subject ("Sun" before "surface").
    sketch.primary = std::move(proper);
    sketch.primary.insert(sketch.primary.end(), std::make_move_iterator(common.begin()),
                          std::make_move_iterator(common.end()));

    for (const auto pos : adverbs) {
        std::optional<std::size_t> target;
        for (std::size_t s = 0; s < secondaries.size() && !target; ++s) {
            if (secondaries[s].pos > pos && secondaries[s].adjective) target = s;
        }
        for (std::size_t s = secondaries.size(); s-- > 0 && !target;) {
            if (secondaries[s].pos < pos) target = s;
        }
        for (std::size_t s = 0; s < secondaries.size() && !target; ++s) {
            if (secondaries[s].pos > pos) target = s;
        }
        if (target) sketch.tertiary.push_back({*target, tagged[pos].surface});
    }
    return sketch;
}

std::vector<TaggedToken> parse_pretagged_line(std::string_view line, std::size_t line_no) {
    std::vector<TaggedToken> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])) != 0) ++i;
        if (i >= line.size()) break;
        auto end = i;
        while (end < line.size() && std::isspace(static_cast<unsigned char>(line[end])) == 0) ++end;
        const auto item = line.substr(i, end - i);
        const auto sep = item.rfind('_');
        if (sep == std::string_view::npos || sep == 0 || sep + 1 == item.size()) {
            throw ParseError("pretagged", line_no, "expected surface_TAG, got '" + std::string(item) + "'");
        }
        const auto tag = item.substr(sep + 1);
        if (!is_penn_tag(tag)) {
            throw ParseError("pretagged", line_no, "unknown Penn tag '" + std::string(tag) + "'");
        }
        out.push_back({std::string(item.substr(0, sep)), std::string(tag)});
        i = end;
    }
    return out;
}

std::vector<NodeSketch> sketch_text(std::string_view text, const Tagger& tagger) {
    std::vector<NodeSketch> out;
    for (const auto& sentence : split_sentences(text)) {
        const auto tokens = tokenize(sentence);
        out.push_back(classify(tag(tokens, tagger)));
    }
    return out;
}

}  // namespace dmem
