#include "newssent/scoring.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace newssent {

Label classify(double score, double epsilon) {
    if (std::abs(score) <= epsilon) {
        return Label::neutral;
    }
    return score > epsilon ? Label::positive : Label::negative;
}

DocumentVerdict score_document(const TokenStream& stream, const TermWeights& weights,
                               const Lexicon& lex, const ScoringConfig& cfg) {
    // Distinct terms in sorted order; scoring is then independent of token
    // order and reproducible bit-for-bit.
    std::map<std::string, std::size_t> occurrences;
    for (const Token& token : stream.tokens) {
        ++occurrences[token.text];
    }

    std::size_t opinion_tokens = 0;
    double weighted_sum = 0.0;
    double weight_mass = 0.0;
    for (const auto& [term, count] : occurrences) {
        const std::optional<WordPolarity> polarity = word_polarity(term, lex, cfg.sense_mode);
        if (!polarity) {
            continue;
        }
        opinion_tokens += count;
        const double tfidf_weight = weights.weight(term);
        if (tfidf_weight < cfg.min_weight) {
            continue;  // TF-IDF acts as term selection regardless of mode
        }
        const double score_weight =
            cfg.weighting == TermWeighting::tfidf ? tfidf_weight : 1.0;
        weighted_sum += score_weight * polarity->score;
        weight_mass += score_weight;
    }

    const double score = weight_mass > 0.0 ? weighted_sum / weight_mass : 0.0;
    return DocumentVerdict{stream.doc_id, score, classify(score, cfg.epsilon),
                           opinion_tokens, weighted_sum};
}

std::vector<DocumentVerdict> score_corpus(const Corpus& corpus, const Lexicon& lex,
                                          const StopwordList& stops,
                                          const ScoringConfig& cfg,
                                          const MorphologyRules* morph) {
    if (corpus.documents.empty()) {
        throw Error("score_corpus: empty corpus");
    }
    MorphologyRules derived;
    if (morph == nullptr) {
        derived = MorphologyRules(lex.lemma_set());
        morph = &derived;
    }

    std::vector<TokenStream> streams;
    streams.reserve(corpus.documents.size());
    for (const Document& doc : corpus.documents) {
        streams.push_back(preprocess(doc.raw_text, doc.id, stops, *morph));
    }
    const VocabularyIndex index = build_index(streams);

    std::vector<DocumentVerdict> verdicts;
    verdicts.reserve(streams.size());
    for (const TokenStream& stream : streams) {
        const TermWeights weights = compute_weights(stream, index, cfg.scheme);
        verdicts.push_back(score_document(stream, weights, lex, cfg));
    }
    return verdicts;
}

const char* to_string(Label label) {
    switch (label) {
        case Label::positive: return "positive";
        case Label::negative: return "negative";
        case Label::neutral: return "neutral";
    }
    return "neutral";
}

const char* to_string(TermWeighting weighting) {
    switch (weighting) {
        case TermWeighting::tfidf: return "tfidf";
        case TermWeighting::uniform: return "uniform";
    }
    return "tfidf";
}

std::optional<TermWeighting> weighting_from_string(std::string_view name) {
    if (name == "tfidf") return TermWeighting::tfidf;
    if (name == "uniform") return TermWeighting::uniform;
    return std::nullopt;
}

}  // namespace newssent
