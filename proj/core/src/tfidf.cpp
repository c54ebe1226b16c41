#include "newssent/tfidf.hpp"

#include <cmath>
#include <unordered_set>

namespace newssent {
namespace {

double term_count(const std::string& term, const TokenStream& stream) {
    std::size_t count = 0;
    for (const Token& token : stream.tokens) {
        if (token.text == term) {
            ++count;
        }
    }
    return static_cast<double>(count);
}

double tf_under(TfMode mode, const std::string& term, const TokenStream& stream) {
    const double count = term_count(term, stream);
    switch (mode) {
        case TfMode::raw:
            return count;
        case TfMode::log_scaled:
            return count > 0.0 ? 1.0 + std::log(count) : 0.0;
        case TfMode::relative:
            break;
    }
    return stream.tokens.empty() ? 0.0
                                 : count / static_cast<double>(stream.tokens.size());
}

double idf_under(IdfMode mode, std::size_t df, std::size_t n_docs) {
    const double n = static_cast<double>(n_docs);
    const double d = static_cast<double>(df);
    if (mode == IdfMode::smooth) {
        return std::log((1.0 + n) / (1.0 + d));
    }
    return std::log(n / d);
}

}  // namespace

VocabularyIndex build_index(std::span<const TokenStream> streams) {
    if (streams.empty()) {
        throw Error("build_index: no token streams");
    }
    VocabularyIndex index;
    index.n_docs = streams.size();
    std::unordered_set<std::string> seen;
    for (const TokenStream& stream : streams) {
        seen.clear();
        for (const Token& token : stream.tokens) {
            if (seen.insert(token.text).second) {
                ++index.doc_freq[token.text];
            }
        }
    }
    return index;
}

double tf(const std::string& term, const TokenStream& stream) {
    return tf_under(TfMode::relative, term, stream);
}

double tfidf(const std::string& term, const TokenStream& stream,
             const VocabularyIndex& index, WeightingScheme scheme) {
    const std::size_t df = index.df(term);
    if (df == 0) {
        return 0.0;  // out-of-corpus term
    }
    const double tf_value = tf_under(scheme.tf, term, stream);
    if (tf_value == 0.0) {
        return 0.0;
    }
    return tf_value * idf_under(scheme.idf, df, index.n_docs);
}

TermWeights compute_weights(const TokenStream& stream, const VocabularyIndex& index,
                            WeightingScheme scheme) {
    TermWeights weights;
    weights.doc_id = stream.doc_id;
    for (const Token& token : stream.tokens) {
        if (weights.weights.count(token.text) == 0) {
            weights.weights.emplace(token.text, tfidf(token.text, stream, index, scheme));
        }
    }
    return weights;
}

}  // namespace newssent
