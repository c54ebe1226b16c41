#include "newssent/text.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "newssent/error.hpp"

namespace newssent {
namespace {

bool is_ascii_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string lowercased(std::string_view word) {
    std::string out(word);
    std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
    return out;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

// WordNet detachment table, noun rules first, then verb, then adjective,
// with exact duplicates removed. Order matters: the first suffix whose
// replacement lands in the lemma set wins.
struct Detachment {
    std::string_view suffix;
    std::string_view replacement;
    bool try_undoubling;  // "stopped" -> "stopp" -> "stop"
};

constexpr std::array<Detachment, 18> kDetachments{{
    {"s", "", false},
    {"ses", "s", false},
    {"xes", "x", false},
    {"zes", "z", false},
    {"ches", "ch", false},
    {"shes", "sh", false},
    {"men", "man", false},
    {"ies", "y", false},
    {"es", "e", false},
    {"es", "", false},
    {"ed", "e", false},
    {"ed", "", true},
    {"ing", "e", false},
    {"ing", "", true},
    {"er", "", false},
    {"est", "", false},
    {"er", "e", false},
    {"est", "e", false},
}};

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(const std::string& word, std::string_view suffix) {
    return word.size() > suffix.size() &&
           word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

StopwordList::StopwordList(std::initializer_list<std::string_view> words) {
    for (std::string_view w : words) {
        if (!w.empty()) {
            words_.insert(lowercased(w));
        }
    }
}

StopwordList StopwordList::from_stream(std::istream& in) {
    StopwordList list;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(std::move(line));
        if (line.empty() || line.front() == '#') {
            continue;
        }
        list.words_.insert(lowercased(line));
    }
    return list;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open stopword file: " + path.string());
    }
    return from_stream(in);
}

MorphologyRules::MorphologyRules(std::unordered_set<std::string> lemmas)
    : lemmas_(std::move(lemmas)) {}

void MorphologyRules::add_exception(std::string inflected, std::string base) {
    if (!inflected.empty() && !base.empty()) {
        exceptions_.emplace(std::move(inflected), std::move(base));
    }
}

void MorphologyRules::add_exceptions_stream(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(std::move(line));
        std::istringstream fields(line);
        std::string inflected;
        std::string base;
        if (fields >> inflected >> base) {
            add_exception(std::move(inflected), std::move(base));
        }
    }
}

void MorphologyRules::add_exceptions_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open morphology exception file: " + path.string());
    }
    add_exceptions_stream(in);
}

std::string MorphologyRules::base_form(const std::string& token) const {
    if (auto it = exceptions_.find(token); it != exceptions_.end()) {
        return it->second;
    }
    if (token.size() <= 2) {
        return token;
    }
    const bool double_s = token.size() >= 2 && token.compare(token.size() - 2, 2, "ss") == 0;
    for (const Detachment& rule : kDetachments) {
        if (!ends_with(token, rule.suffix)) {
            continue;
        }
        if (rule.suffix == "s" && double_s) {
            continue;  // "pass", "press", ... keep their tail
        }
        std::string stemmed = token.substr(0, token.size() - rule.suffix.size());
        std::string candidate = stemmed + std::string(rule.replacement);
        if (lemmas_.count(candidate) != 0) {
            return candidate;
        }
        if (rule.try_undoubling && stemmed.size() >= 3) {
            const char last = stemmed[stemmed.size() - 1];
            if (last == stemmed[stemmed.size() - 2] && !is_vowel(last)) {
                std::string undoubled = stemmed.substr(0, stemmed.size() - 1);
                if (lemmas_.count(undoubled) != 0) {
                    return undoubled;
                }
            }
        }
    }
    return token;
}

TokenStream tokenize(std::string_view raw_text, std::string doc_id) {
    TokenStream stream;
    stream.doc_id = std::move(doc_id);
    std::string current;
    std::size_t position = 0;

    const auto flush = [&] {
        if (!current.empty()) {
            stream.tokens.push_back(Token{std::move(current), position++});
            current.clear();
        }
    };

    for (std::size_t i = 0; i < raw_text.size(); ++i) {
        const char c = raw_text[i];
        if (is_ascii_alpha(c)) {
            current += c;
        } else if (c == '\'' && !current.empty() && i + 1 < raw_text.size() &&
                   is_ascii_alpha(raw_text[i + 1])) {
            current += c;  // internal apostrophe only
        } else {
            flush();
        }
    }
    flush();
    return stream;
}

TokenStream transform_lowercase(TokenStream stream) {
    for (Token& token : stream.tokens) {
        std::transform(token.text.begin(), token.text.end(), token.text.begin(), ascii_lower);
    }
    return stream;
}

TokenStream filter_stopwords(TokenStream stream, const StopwordList& stops) {
    std::erase_if(stream.tokens,
                  [&](const Token& token) { return stops.contains(token.text); });
    return stream;
}

TokenStream stem(TokenStream stream, const MorphologyRules& morph) {
    for (Token& token : stream.tokens) {
        token.text = morph.base_form(token.text);
    }
    return stream;
}

TokenStream preprocess(std::string_view raw_text, std::string doc_id,
                       const StopwordList& stops, const MorphologyRules& morph) {
    return stem(filter_stopwords(transform_lowercase(tokenize(raw_text, std::move(doc_id))),
                                 stops),
                morph);
}

}  // namespace newssent
