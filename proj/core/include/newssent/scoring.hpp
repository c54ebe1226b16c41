#ifndef NEWSSENT_SCORING_HPP_
#define NEWSSENT_SCORING_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newssent/corpus.hpp"
#include "newssent/lexicon.hpp"
#include "newssent/text.hpp"
#include "newssent/tfidf.hpp"

namespace newssent {

enum class Label {
    positive,
    negative,
    neutral,
};

enum class TermWeighting {
    tfidf,    // score weight = the term's TF-IDF value
    uniform,  // score weight = 1 per selected term
};

struct ScoringConfig {
    double epsilon = 0.0;     // |score| <= epsilon -> neutral
    TermWeighting weighting = TermWeighting::tfidf;
    SenseMode sense_mode = SenseMode::rank;
    double min_weight = 0.0;  // terms with TF-IDF below this never score
    WeightingScheme scheme{}; // tf/idf variant knobs
};

struct DocumentVerdict {
    std::string doc_id;
    double score;  // in [-1, +1]
    Label label;
    std::size_t n_opinion_words;  // tokens that hit the lexicon
    double weighted_sum;          // unnormalized sum(w * s), for debugging
};

// neutral if |score| <= epsilon, positive if score > epsilon, else negative.
Label classify(double score, double epsilon);

// Weight-normalized average of word polarities over the stream's distinct
// terms. A term contributes when it has a lexicon polarity and its TF-IDF
// weight is >= cfg.min_weight; its score weight is then the TF-IDF value or
// 1 depending on cfg.weighting. No contributing terms (or an all-zero weight
// mass) yields score 0 / neutral.
DocumentVerdict score_document(const TokenStream& stream, const TermWeights& weights,
                               const Lexicon& lex, const ScoringConfig& cfg = {});

// Full pipeline over a corpus: preprocess every document, build the shared
// index, score each document. When `morph` is null, morphology is derived
// from the lexicon's lemma set with no exception list. Throws Error on an
// empty corpus. Verdicts are id-aligned with corpus.documents.
std::vector<DocumentVerdict> score_corpus(const Corpus& corpus, const Lexicon& lex,
                                          const StopwordList& stops,
                                          const ScoringConfig& cfg = {},
                                          const MorphologyRules* morph = nullptr);

const char* to_string(Label label);
const char* to_string(TermWeighting weighting);
std::optional<TermWeighting> weighting_from_string(std::string_view name);

}  // namespace newssent

#endif  // NEWSSENT_SCORING_HPP_
