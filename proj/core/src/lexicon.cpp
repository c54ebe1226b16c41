#include "newssent/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <string_view>
#include <utility>

namespace newssent {
namespace {

constexpr double kScoreSlack = 1e-9;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(text.substr(start));
            return fields;
        }
        fields.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

bool parse_score(std::string_view field, double& out) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && out >= 0.0 && out <= 1.0;
}

bool parse_pos_tag(std::string_view field, PosTag& out) {
    if (field.size() != 1) {
        return false;
    }
    switch (field.front()) {
        case 'n': out = PosTag::noun; return true;
        case 'v': out = PosTag::verb; return true;
        case 'a': out = PosTag::adjective; return true;
        case 'r': out = PosTag::adverb; return true;
        case 's': out = PosTag::adjective_satellite; return true;
        default: return false;
    }
}

// "lemma#rank" -> LemmaSense; the rank follows the last '#'.
bool parse_sense_token(std::string_view token, LemmaSense& out) {
    const std::size_t hash = token.rfind('#');
    if (hash == std::string_view::npos || hash == 0 || hash + 1 == token.size()) {
        return false;
    }
    const std::string_view rank_part = token.substr(hash + 1);
    if (!all_digits(rank_part)) {
        return false;
    }
    int rank = 0;
    std::from_chars(rank_part.data(), rank_part.data() + rank_part.size(), rank);
    if (rank < 1) {
        return false;
    }
    out.lemma = std::string(token.substr(0, hash));
    out.sense_rank = rank;
    return true;
}

bool parse_data_line(std::string_view line, SynsetEntry& entry) {
    const std::vector<std::string_view> fields = split(line, '\t');
    if (fields.size() != 6) {
        return false;
    }
    if (!parse_pos_tag(fields[0], entry.pos_tag)) {
        return false;
    }
    if (fields[1].size() != 8 || !all_digits(fields[1])) {
        return false;
    }
    entry.synset_id = std::string(fields[1]);
    if (!parse_score(fields[2], entry.pos_score) || !parse_score(fields[3], entry.neg_score)) {
        return false;
    }
    if (entry.pos_score + entry.neg_score > 1.0 + kScoreSlack) {
        return false;
    }
    entry.lemmas.clear();
    for (std::string_view sense_token : split(fields[4], ' ')) {
        if (sense_token.empty()) {
            continue;
        }
        LemmaSense sense;
        if (!parse_sense_token(sense_token, sense)) {
            return false;
        }
        entry.lemmas.push_back(std::move(sense));
    }
    if (entry.lemmas.empty()) {
        return false;
    }
    entry.gloss = std::string(fields[5]);
    return true;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

std::span<const SenseRef> Lexicon::senses(const std::string& lemma) const {
    auto it = by_lemma_.find(lemma);
    if (it == by_lemma_.end()) {
        return {};
    }
    return it->second;
}

std::unordered_set<std::string> Lexicon::lemma_set() const {
    std::unordered_set<std::string> lemmas;
    lemmas.reserve(by_lemma_.size());
    for (const auto& [lemma, refs] : by_lemma_) {
        lemmas.insert(lemma);
    }
    return lemmas;
}

Lexicon parse_lexicon(std::istream& in) {
    Lexicon lex;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        if (is_blank(line)) {
            continue;
        }
        SynsetEntry entry;
        if (!parse_data_line(line, entry)) {
            ++lex.skipped_lines_;
            continue;
        }
        const std::size_t index = lex.entries_.size();
        for (const LemmaSense& sense : entry.lemmas) {
            lex.by_lemma_[sense.lemma].push_back(SenseRef{index, sense.sense_rank});
        }
        lex.entries_.push_back(std::move(entry));
    }

    if (lex.entries_.empty()) {
        throw LexiconError("not a SentiWordNet file: no parseable data lines");
    }

    // Canonical sense order per lemma, so aggregation never depends on the
    // order data lines arrived in.
    for (auto& [lemma, refs] : lex.by_lemma_) {
        std::sort(refs.begin(), refs.end(), [&](const SenseRef& a, const SenseRef& b) {
            if (a.sense_rank != b.sense_rank) {
                return a.sense_rank < b.sense_rank;
            }
            const SynsetEntry& ea = lex.entries_[a.entry_index];
            const SynsetEntry& eb = lex.entries_[b.entry_index];
            if (ea.synset_id != eb.synset_id) {
                return ea.synset_id < eb.synset_id;
            }
            return static_cast<char>(ea.pos_tag) < static_cast<char>(eb.pos_tag);
        });
    }
    return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw LexiconError("cannot open lexicon file: " + path.string());
    }
    try {
        return parse_lexicon(in);
    } catch (const LexiconError&) {
        throw LexiconError("not a SentiWordNet file: " + path.string());
    }
}

std::optional<WordPolarity> word_polarity(const std::string& lemma, const Lexicon& lex,
                                          SenseMode mode) {
    const std::span<const SenseRef> senses = lex.senses(lemma);
    if (senses.empty()) {
        return std::nullopt;
    }

    int min_rank = senses.front().sense_rank;  // sorted: front has minimal rank
    double weighted = 0.0;
    double total = 0.0;
    for (const SenseRef& ref : senses) {
        const SynsetEntry& entry = lex.entries()[ref.entry_index];
        const double polarity = entry.pos_score - entry.neg_score;
        double weight = 1.0;
        switch (mode) {
            case SenseMode::first:
                if (ref.sense_rank != min_rank) {
                    continue;
                }
                break;
            case SenseMode::rank:
                weight = 1.0 / static_cast<double>(ref.sense_rank);
                break;
            case SenseMode::average:
                break;
        }
        weighted += weight * polarity;
        total += weight;
    }
    return WordPolarity{lemma, weighted / total};
}

const char* to_string(SenseMode mode) {
    switch (mode) {
        case SenseMode::first: return "first";
        case SenseMode::rank: return "rank";
        case SenseMode::average: return "average";
    }
    return "rank";
}

std::optional<SenseMode> sense_mode_from_string(std::string_view name) {
    if (name == "first") return SenseMode::first;
    if (name == "rank") return SenseMode::rank;
    if (name == "average") return SenseMode::average;
    return std::nullopt;
}

}  // namespace newssent
