#ifndef NEWSSENT_TEXT_HPP_
#define NEWSSENT_TEXT_HPP_

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace newssent {

struct Token {
    std::string text;      // never empty, never contains whitespace
    std::size_t position;  // ordinal in the original token sequence

    bool operator==(const Token&) const = default;
};

struct TokenStream {
    std::string doc_id;
    std::vector<Token> tokens;  // positions strictly increasing

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
};

// A set of words to drop before scoring. All entries are lowercase.
class StopwordList {
public:
    StopwordList() = default;
    StopwordList(std::initializer_list<std::string_view> words);

    // The bundled English list (174 words).
    static StopwordList default_english();

    // One word per line, UTF-8; blank lines and lines starting with '#' are
    // ignored; entries are lowercased. Throws Error on an unreadable path.
    static StopwordList from_file(const std::filesystem::path& path);
    static StopwordList from_stream(std::istream& in);

    bool contains(const std::string& word) const { return words_.count(word) != 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// WordNet-style morphological reduction: an exception list consulted first,
// then suffix-detachment rules whose results are kept only when they appear
// in the lemma set.
class MorphologyRules {
public:
    MorphologyRules() = default;
    explicit MorphologyRules(std::unordered_set<std::string> lemmas);

    // Loads a WordNet "*.exc" exception file: one "inflected base" pair per
    // line, space-separated (extra base forms beyond the first are ignored).
    void add_exceptions_file(const std::filesystem::path& path);
    void add_exceptions_stream(std::istream& in);
    void add_exception(std::string inflected, std::string base);

    bool is_lemma(const std::string& word) const { return lemmas_.count(word) != 0; }
    std::size_t lemma_count() const { return lemmas_.size(); }
    std::size_t exception_count() const { return exceptions_.size(); }

    // Base form of a single token; returns the token unchanged when no
    // exception or validated detachment applies.
    std::string base_form(const std::string& token) const;

private:
    std::unordered_map<std::string, std::string> exceptions_;
    std::unordered_set<std::string> lemmas_;
};

// Splits text into maximal runs of ASCII letters plus internal apostrophes.
// Digits, punctuation and any non-letter bytes are discarded.
TokenStream tokenize(std::string_view raw_text, std::string doc_id = {});

// ASCII-lowercases every token; count and order unchanged.
TokenStream transform_lowercase(TokenStream stream);

// Drops tokens whose text is in `stops`; relative order and original
// positions are preserved. Expects lowercased input.
TokenStream filter_stopwords(TokenStream stream, const StopwordList& stops);

// Replaces each token by its base form (see MorphologyRules::base_form).
TokenStream stem(TokenStream stream, const MorphologyRules& morph);

// tokenize -> transform_lowercase -> filter_stopwords -> stem.
TokenStream preprocess(std::string_view raw_text, std::string doc_id,
                       const StopwordList& stops, const MorphologyRules& morph);

}  // namespace newssent

#endif  // NEWSSENT_TEXT_HPP_
