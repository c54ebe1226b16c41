#ifndef NEWSSENT_REPORT_HPP_
#define NEWSSENT_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newssent/corpus.hpp"
#include "newssent/scoring.hpp"

namespace newssent {

// Per-category verdict counts; positive + negative + neutral = total.
struct CategoryReport {
    Category category;
    std::size_t total = 0;
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t neutral = 0;

    bool operator==(const CategoryReport&) const = default;
};

// Counts verdicts per category, one report per category present in the
// corpus, sorted by category name. Throws Error when a verdict's doc id is
// not in the corpus.
std::vector<CategoryReport> summarize(std::span<const DocumentVerdict> verdicts,
                                      const Corpus& corpus);

enum class ReportFormat {
    table,
    csv,
    json,
    svg,
};

// Renders reports in the requested format:
//   table - aligned text, columns NEWS CLASS / TOTAL ARTICLES / POSITIVE /
//           NEGATIVE / NEUTRAL
//   csv   - header "category,total,positive,negative,neutral", LF endings
//   json  - array of report objects
//   svg   - grouped bar chart, three bars per category
// The per-row count partition is re-checked here; a violated report throws.
std::string render(std::span<const CategoryReport> reports, ReportFormat format);

// Inverse of the csv rendering; throws Error on malformed input.
std::vector<CategoryReport> parse_csv(std::string_view csv);

// Everything needed to re-run a scoring pass bit-identically, plus the
// result summary the run produced.
struct RunManifest {
    std::string corpus_path;
    std::string lexicon_path;
    std::string stopwords_path;  // "<builtin:english>" when the bundled list ran
    ScoringConfig config;
    std::string tool_version;
    std::string timestamp;  // ISO 8601 UTC
    std::vector<CategoryReport> reports;
};

RunManifest make_manifest(std::string corpus_path, std::string lexicon_path,
                          std::string stopwords_path, const ScoringConfig& cfg,
                          std::vector<CategoryReport> reports);

// JSON rendering of a manifest. When the business/entertainment/sport/tech
// categories are all present it includes a directional-agreement block
// (business & sport lean positive, entertainment & tech lean negative).
std::string render_manifest(const RunManifest& manifest);

const char* to_string(ReportFormat format);
std::optional<ReportFormat> report_format_from_string(std::string_view name);

}  // namespace newssent

#endif  // NEWSSENT_REPORT_HPP_
