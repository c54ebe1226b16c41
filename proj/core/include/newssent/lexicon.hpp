#ifndef NEWSSENT_LEXICON_HPP_
#define NEWSSENT_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "newssent/error.hpp"

namespace newssent {

// WordNet part-of-speech tags as they appear in the SentiWordNet file.
enum class PosTag : char {
    noun = 'n',
    verb = 'v',
    adjective = 'a',
    adverb = 'r',
    adjective_satellite = 's',
};

struct LemmaSense {
    std::string lemma;
    int sense_rank;  // >= 1; 1 = most common sense
};

// One synset line of a SentiWordNet 3.0 file. pos_score + neg_score <= 1;
// the remainder is the implicit objectivity.
struct SynsetEntry {
    PosTag pos_tag;
    std::string synset_id;  // 8 decimal digits
    double pos_score;
    double neg_score;
    std::vector<LemmaSense> lemmas;
    std::string gloss;

    double objectivity() const { return 1.0 - pos_score - neg_score; }
};

// A sense of some lemma: which entry it lives in and its rank there.
struct SenseRef {
    std::size_t entry_index;
    int sense_rank;
};

// Parsed lexicon with a per-lemma sense index. Immutable once parsed; safe
// to share across threads.
class Lexicon {
public:
    const std::vector<SynsetEntry>& entries() const { return entries_; }

    // Senses of a lemma, sorted by (sense_rank, synset_id, pos tag) so that
    // aggregation does not depend on input line order. Empty for unknown
    // lemmas.
    std::span<const SenseRef> senses(const std::string& lemma) const;

    bool contains_lemma(const std::string& lemma) const { return by_lemma_.count(lemma) != 0; }
    std::size_t lemma_count() const { return by_lemma_.size(); }

    // Copy of all indexed lemmas; feeds MorphologyRules.
    std::unordered_set<std::string> lemma_set() const;

    // Malformed data lines skipped during parsing.
    std::size_t skipped_lines() const { return skipped_lines_; }

    friend Lexicon parse_lexicon(std::istream& in);

private:
    std::vector<SynsetEntry> entries_;
    std::unordered_map<std::string, std::vector<SenseRef>> by_lemma_;
    std::size_t skipped_lines_ = 0;
};

// Parses the tab-separated SentiWordNet 3.0 format:
//   POS<TAB>ID<TAB>PosScore<TAB>NegScore<TAB>SynsetTerms<TAB>Gloss
// where SynsetTerms is a space-separated list of "lemma#rank" tokens.
// '#'-prefixed lines are comments; malformed lines are counted and skipped.
// Throws LexiconError when no line parses at all.
Lexicon parse_lexicon(std::istream& in);

// Opens and parses a lexicon file; throws LexiconError on unreadable paths.
Lexicon load_lexicon(const std::filesystem::path& path);

// How to collapse a lemma's senses into one score.
enum class SenseMode {
    first,    // only the rank-1 sense(s)
    rank,     // weighted by 1/sense_rank
    average,  // plain mean
};

struct WordPolarity {
    std::string lemma;
    double score;  // in [-1, +1]
};

// Aggregated polarity of a lemma, or nullopt when the lemma is not in the
// lexicon. score = sum(w_i * (pos_i - neg_i)) / sum(w_i) over the lemma's
// senses, with w_i chosen by `mode`.
std::optional<WordPolarity> word_polarity(const std::string& lemma, const Lexicon& lex,
                                          SenseMode mode = SenseMode::rank);

const char* to_string(SenseMode mode);
std::optional<SenseMode> sense_mode_from_string(std::string_view name);

}  // namespace newssent

#endif  // NEWSSENT_LEXICON_HPP_
