#ifndef NEWSSENT_CORPUS_HPP_
#define NEWSSENT_CORPUS_HPP_

#include <compare>
#include <filesystem>
#include <string>
#include <vector>

#include "newssent/error.hpp"

namespace newssent {

// A topical class label, taken verbatim from the directory a document was
// read from ("business", "sport", ...).
struct Category {
    std::string name;

    auto operator<=>(const Category&) const = default;
};

// One news article. `id` is "<category>/<file stem>" and is unique within a
// corpus. `raw_text` is the whole file, with invalid UTF-8 byte sequences
// replaced by U+FFFD.
struct Document {
    std::string id;
    Category category;
    std::string raw_text;
};

// An immutable labeled document collection. Documents are sorted by id so
// two loads of the same tree compare equal. `warnings` records files that
// were skipped (unreadable / colliding ids) instead of aborting the load.
struct Corpus {
    std::vector<Document> documents;
    std::vector<Category> categories;  // sorted, unique
    std::vector<std::string> warnings;
};

// Loads a corpus laid out as <root>/<category>/<file>. Only regular files in
// first-level subdirectories are read. Throws IngestError if the root is
// missing/unreadable or yields no documents; unreadable individual files are
// skipped with a warning.
Corpus load_corpus(const std::filesystem::path& root);

// Reads one file into a Document under the given category.
// Throws IngestError if the file cannot be read.
Document load_single(const std::filesystem::path& path, const Category& category);

// Replaces invalid UTF-8 byte sequences with U+FFFD. Valid input is returned
// unchanged.
std::string sanitize_utf8(std::string_view bytes);

}  // namespace newssent

#endif  // NEWSSENT_CORPUS_HPP_
