#ifndef NEWSSENT_TESTS_TESTUTIL_HPP_
#define NEWSSENT_TESTS_TESTUTIL_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        std::ostringstream name;
        name << "newssent_test_" << std::hex << rd() << rd();
        path_ = std::filesystem::temp_directory_path() / name.str();
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& relative, const std::string& content) const {
        const std::filesystem::path file = path_ / relative;
        std::filesystem::create_directories(file.parent_path());
        std::ofstream out(file, std::ios::binary);
        out << content;
        return file;
    }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::filesystem::path fixture_dir() { return NEWSSENT_FIXTURE_DIR; }
inline std::filesystem::path data_dir() { return NEWSSENT_DATA_DIR; }
inline std::filesystem::path fixture_lexicon_path() {
    return data_dir() / "fixture_lexicon.txt";
}

// Minimal XML well-formedness scan: balanced tags, quoted attributes, no
// stray '&' or '<' in text content. Good enough to vet generated SVG.
inline bool well_formed_xml(const std::string& xml, std::string* why = nullptr) {
    const auto fail = [&](const std::string& reason) {
        if (why != nullptr) *why = reason;
        return false;
    };
    std::vector<std::string> stack;
    std::size_t roots = 0;
    std::size_t i = 0;
    while (i < xml.size()) {
        const char c = xml[i];
        if (c == '<') {
            const std::size_t close = xml.find('>', i);
            if (close == std::string::npos) return fail("unterminated tag");
            std::string tag = xml.substr(i + 1, close - i - 1);
            i = close + 1;
            if (tag.empty()) return fail("empty tag");
            if (tag.front() == '?') {
                if (tag.back() != '?') return fail("bad processing instruction");
                continue;
            }
            if (tag.front() == '!') continue;  // comment / doctype
            if (tag.front() == '/') {
                const std::string name = tag.substr(1);
                if (stack.empty() || stack.back() != name) {
                    return fail("mismatched closing tag: " + name);
                }
                stack.pop_back();
                continue;
            }
            const bool self_closing = tag.back() == '/';
            if (self_closing) tag.pop_back();
            const std::size_t space = tag.find_first_of(" \t\n");
            const std::string name = tag.substr(0, space);
            if (name.empty()) return fail("nameless tag");
            // attribute quotes must pair up
            if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) {
                return fail("unbalanced attribute quotes in <" + name + ">");
            }
            if (!self_closing) {
                if (stack.empty()) ++roots;
                stack.push_back(name);
            } else if (stack.empty()) {
                ++roots;
            }
        } else if (c == '&') {
            static const char* entities[] = {"&amp;", "&lt;", "&gt;", "&quot;", "&apos;"};
            bool ok = false;
            for (const char* entity : entities) {
                if (xml.compare(i, std::string(entity).size(), entity) == 0) {
                    ok = true;
                    break;
                }
            }
            if (!ok && !(i + 1 < xml.size() && xml[i + 1] == '#')) {
                return fail("stray '&'");
            }
            ++i;
        } else {
            ++i;
        }
    }
    if (!stack.empty()) return fail("unclosed tag: " + stack.back());
    if (roots != 1) return fail("expected exactly one root element");
    return true;
}

}  // namespace testutil

#endif  // NEWSSENT_TESTS_TESTUTIL_HPP_
