#include "newssent/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace newssent {
namespace {

namespace fs = std::filesystem;

std::string read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IngestError("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IngestError("read failure on file: " + path.string());
    }
    return std::move(buf).str();
}

constexpr std::string_view kReplacement = "\xEF\xBF\xBD";  // U+FFFD

// Length of the valid UTF-8 sequence starting at data[i], or 0 when invalid.
std::size_t utf8_sequence_length(std::string_view data, std::size_t i) {
    const auto byte = [&](std::size_t k) { return static_cast<std::uint8_t>(data[k]); };
    const std::uint8_t b0 = byte(i);
    if (b0 < 0x80) return 1;
    if (b0 < 0xC2) return 0;  // continuation byte or overlong lead
    std::size_t len = 0;
    std::uint8_t lo = 0x80;
    std::uint8_t hi = 0xBF;
    if (b0 <= 0xDF) {
        len = 2;
    } else if (b0 <= 0xEF) {
        len = 3;
        if (b0 == 0xE0) lo = 0xA0;        // reject overlong
        if (b0 == 0xED) hi = 0x9F;        // reject surrogates
    } else if (b0 <= 0xF4) {
        len = 4;
        if (b0 == 0xF0) lo = 0x90;        // reject overlong
        if (b0 == 0xF4) hi = 0x8F;        // reject > U+10FFFF
    } else {
        return 0;
    }
    if (i + len > data.size()) return 0;
    if (byte(i + 1) < lo || byte(i + 1) > hi) return 0;
    for (std::size_t k = 2; k < len; ++k) {
        if (byte(i + k) < 0x80 || byte(i + k) > 0xBF) return 0;
    }
    return len;
}

}  // namespace

std::string sanitize_utf8(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const std::size_t len = utf8_sequence_length(bytes, i);
        if (len == 0) {
            out += kReplacement;
            ++i;
        } else {
            out.append(bytes.substr(i, len));
            i += len;
        }
    }
    return out;
}

Document load_single(const fs::path& path, const Category& category) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw IngestError("not a readable regular file: " + path.string());
    }
    Document doc;
    doc.category = category;
    doc.id = category.name + "/" + path.stem().string();
    doc.raw_text = sanitize_utf8(read_file_bytes(path));
    return doc;
}

Corpus load_corpus(const fs::path& root) {
    std::error_code ec;
    if (!fs::is_directory(root, ec) || ec) {
        throw IngestError("corpus root is not a readable directory: " + root.string());
    }

    Corpus corpus;
    std::vector<fs::path> category_dirs;
    for (fs::directory_iterator it(root, ec), end; !ec && it != end; it.increment(ec)) {
        if (it->is_directory(ec)) {
            category_dirs.push_back(it->path());
        }
    }
    if (ec) {
        throw IngestError("cannot iterate corpus root: " + root.string());
    }
    std::sort(category_dirs.begin(), category_dirs.end());

    std::set<std::string> seen_ids;
    for (const fs::path& dir : category_dirs) {
        const Category category{dir.filename().string()};
        corpus.categories.push_back(category);

        std::vector<fs::path> files;
        std::error_code dir_ec;
        for (fs::directory_iterator it(dir, dir_ec), end; !dir_ec && it != end;
             it.increment(dir_ec)) {
            std::error_code file_ec;
            if (it->is_regular_file(file_ec)) {
                files.push_back(it->path());
            } else if (file_ec) {
                corpus.warnings.push_back("skipped unreadable entry: " + it->path().string());
            }
        }
        if (dir_ec) {
            corpus.warnings.push_back("stopped iterating category: " + dir.string());
        }
        std::sort(files.begin(), files.end());

        for (const fs::path& file : files) {
            std::string text;
            try {
                text = sanitize_utf8(read_file_bytes(file));
            } catch (const IngestError&) {
                corpus.warnings.push_back("skipped unreadable file: " + file.string());
                continue;
            }
            std::string id = category.name + "/" + file.stem().string();
            if (!seen_ids.insert(id).second) {
                // Stem collision within a category; fall back to the full
                // filename to keep ids unique.
                id = category.name + "/" + file.filename().string();
                if (!seen_ids.insert(id).second) {
                    corpus.warnings.push_back("skipped duplicate document id: " + id);
                    continue;
                }
                corpus.warnings.push_back("document id collision, used full filename: " + id);
            }
            corpus.documents.push_back(Document{std::move(id), category, std::move(text)});
        }
    }

    if (corpus.documents.empty()) {
        throw IngestError("no documents found under corpus root: " + root.string());
    }
    std::sort(corpus.documents.begin(), corpus.documents.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    std::sort(corpus.categories.begin(), corpus.categories.end());
    corpus.categories.erase(std::unique(corpus.categories.begin(), corpus.categories.end()),
                            corpus.categories.end());
    return corpus;
}

}  // namespace newssent
