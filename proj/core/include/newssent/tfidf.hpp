#ifndef NEWSSENT_TFIDF_HPP_
#define NEWSSENT_TFIDF_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>

#include "newssent/error.hpp"
#include "newssent/text.hpp"

namespace newssent {

// Corpus-wide document frequencies.
struct VocabularyIndex {
    std::unordered_map<std::string, std::size_t> doc_freq;
    std::size_t n_docs = 0;

    std::size_t df(const std::string& term) const {
        auto it = doc_freq.find(term);
        return it == doc_freq.end() ? 0 : it->second;
    }
};

enum class TfMode {
    relative,    // count / stream length (default)
    raw,         // plain count
    log_scaled,  // 1 + ln(count) for count > 0
};

enum class IdfMode {
    plain,   // ln(N / df) (default)
    smooth,  // ln((1 + N) / (1 + df))
};

struct WeightingScheme {
    TfMode tf = TfMode::relative;
    IdfMode idf = IdfMode::plain;
};

// One aggregation pass over preprocessed streams. Throws Error on an empty
// collection.
VocabularyIndex build_index(std::span<const TokenStream> streams);

// Relative term frequency: count / total tokens; 0 for an empty stream.
double tf(const std::string& term, const TokenStream& stream);

// tf * idf under `scheme`; 0 for terms absent from the stream or the index.
double tfidf(const std::string& term, const TokenStream& stream,
             const VocabularyIndex& index, WeightingScheme scheme = {});

// Per-document weights over the document's own distinct terms.
struct TermWeights {
    std::string doc_id;
    std::unordered_map<std::string, double> weights;

    double weight(const std::string& term) const {
        auto it = weights.find(term);
        return it == weights.end() ? 0.0 : it->second;
    }
};

TermWeights compute_weights(const TokenStream& stream, const VocabularyIndex& index,
                            WeightingScheme scheme = {});

}  // namespace newssent

#endif  // NEWSSENT_TFIDF_HPP_
