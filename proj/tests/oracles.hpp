#ifndef NEWSSENT_TESTS_ORACLES_HPP_
#define NEWSSENT_TESTS_ORACLES_HPP_

// Brute-force reference implementations written straight from the formulas.
// Deliberately independent of the library: nested loops, flat data, own file
// reader. Tests compare the library against these.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Doc = std::vector<std::string>;

inline double tf(const std::string& term, const Doc& doc) {
    if (doc.empty()) {
        return 0.0;
    }
    double count = 0;
    for (const std::string& token : doc) {
        if (token == term) {
            count += 1;
        }
    }
    return count / static_cast<double>(doc.size());
}

inline std::size_t df(const std::string& term, const std::vector<Doc>& docs) {
    std::size_t n = 0;
    for (const Doc& doc : docs) {
        for (const std::string& token : doc) {
            if (token == term) {
                ++n;
                break;
            }
        }
    }
    return n;
}

inline double tfidf(const std::string& term, const Doc& doc, const std::vector<Doc>& docs) {
    const std::size_t d = df(term, docs);
    if (d == 0) {
        return 0.0;
    }
    return tf(term, doc) * std::log(static_cast<double>(docs.size()) / static_cast<double>(d));
}

// One (lemma, rank, pos, neg) row per sense token in the lexicon file.
struct Sense {
    std::string lemma;
    int rank;
    double pos;
    double neg;
};

// Flat reader for the SentiWordNet format, independent of the library
// parser: no validation beyond what splitting needs, rows in file order.
inline std::vector<Sense> load_senses(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("oracle: cannot open " + path);
    }
    std::vector<Sense> senses;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t pos = line.find('\t'); pos != std::string::npos;
             pos = line.find('\t', start)) {
            fields.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        fields.push_back(line.substr(start));
        if (fields.size() < 5) {
            continue;
        }
        const double pos_score = std::stod(fields[2]);
        const double neg_score = std::stod(fields[3]);
        std::size_t term_start = 0;
        const std::string& terms = fields[4];
        while (term_start < terms.size()) {
            std::size_t term_end = terms.find(' ', term_start);
            if (term_end == std::string::npos) {
                term_end = terms.size();
            }
            const std::string token = terms.substr(term_start, term_end - term_start);
            term_start = term_end + 1;
            const std::size_t hash = token.rfind('#');
            if (hash == std::string::npos) {
                continue;
            }
            senses.push_back(Sense{token.substr(0, hash), std::stoi(token.substr(hash + 1)),
                                   pos_score, neg_score});
        }
    }
    return senses;
}

enum class SenseMode { first, rank, average };
enum class Weighting { tfidf, uniform };

inline std::optional<double> word_polarity(const std::string& lemma,
                                           const std::vector<Sense>& senses,
                                           SenseMode mode) {
    std::vector<Sense> mine;
    for (const Sense& sense : senses) {
        if (sense.lemma == lemma) {
            mine.push_back(sense);
        }
    }
    if (mine.empty()) {
        return std::nullopt;
    }
    if (mode == SenseMode::first) {
        int min_rank = mine.front().rank;
        for (const Sense& sense : mine) {
            min_rank = std::min(min_rank, sense.rank);
        }
        double sum = 0;
        double n = 0;
        for (const Sense& sense : mine) {
            if (sense.rank == min_rank) {
                sum += sense.pos - sense.neg;
                n += 1;
            }
        }
        return sum / n;
    }
    double weighted = 0;
    double total = 0;
    for (const Sense& sense : mine) {
        const double w = mode == SenseMode::rank ? 1.0 / sense.rank : 1.0;
        weighted += w * (sense.pos - sense.neg);
        total += w;
    }
    return weighted / total;
}

struct ScoreBreakdown {
    double score = 0.0;
    double weighted_sum = 0.0;
    std::size_t opinion_tokens = 0;
};

// Literal document score: distinct terms, polarity via the flat sense list,
// selection by TF-IDF >= min_weight, weight by mode, normalized average.
inline ScoreBreakdown score_document(const Doc& doc, const std::vector<Doc>& docs,
                                     const std::vector<Sense>& senses, SenseMode sense_mode,
                                     Weighting weighting, double min_weight) {
    ScoreBreakdown result;
    const std::set<std::string> distinct(doc.begin(), doc.end());
    double num = 0;
    double den = 0;
    for (const std::string& term : distinct) {
        const std::optional<double> polarity = word_polarity(term, senses, sense_mode);
        if (!polarity) {
            continue;
        }
        for (const std::string& token : doc) {
            if (token == term) {
                ++result.opinion_tokens;
            }
        }
        const double weight_value = tfidf(term, doc, docs);
        if (weight_value < min_weight) {
            continue;
        }
        const double w = weighting == Weighting::tfidf ? weight_value : 1.0;
        num += w * *polarity;
        den += w;
    }
    result.weighted_sum = num;
    result.score = den > 0 ? num / den : 0.0;
    return result;
}

}  // namespace oracle

#endif  // NEWSSENT_TESTS_ORACLES_HPP_
