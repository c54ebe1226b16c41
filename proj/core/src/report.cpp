#include "newssent/report.hpp"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <iomanip>
#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "newssent/version.hpp"

namespace newssent {
namespace {

void check_partition(const CategoryReport& report) {
    if (report.positive + report.negative + report.neutral != report.total) {
        throw Error("report counts do not partition total for category: " +
                    report.category.name);
    }
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string render_csv(std::span<const CategoryReport> reports) {
    std::ostringstream out;
    out << "category,total,positive,negative,neutral\n";
    for (const CategoryReport& r : reports) {
        out << csv_field(r.category.name) << ',' << r.total << ',' << r.positive << ','
            << r.negative << ',' << r.neutral << '\n';
    }
    return std::move(out).str();
}

std::string render_table(std::span<const CategoryReport> reports) {
    constexpr std::string_view kHeaders[5] = {"NEWS CLASS", "TOTAL ARTICLES", "POSITIVE",
                                              "NEGATIVE", "NEUTRAL"};
    std::size_t name_width = kHeaders[0].size();
    for (const CategoryReport& r : reports) {
        name_width = std::max(name_width, r.category.name.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(name_width)) << kHeaders[0];
    for (int i = 1; i < 5; ++i) {
        out << "  " << std::right << std::setw(static_cast<int>(kHeaders[i].size()))
            << kHeaders[i];
    }
    out << '\n';
    for (const CategoryReport& r : reports) {
        out << std::left << std::setw(static_cast<int>(name_width)) << r.category.name;
        const std::size_t counts[4] = {r.total, r.positive, r.negative, r.neutral};
        for (int i = 0; i < 4; ++i) {
            out << "  " << std::right << std::setw(static_cast<int>(kHeaders[i + 1].size()))
                << counts[i];
        }
        out << '\n';
    }
    return std::move(out).str();
}

nlohmann::json report_json(const CategoryReport& r) {
    return nlohmann::json{{"category", r.category.name},
                          {"total", r.total},
                          {"positive", r.positive},
                          {"negative", r.negative},
                          {"neutral", r.neutral}};
}

std::string render_json(std::span<const CategoryReport> reports) {
    nlohmann::json array = nlohmann::json::array();
    for (const CategoryReport& r : reports) {
        array.push_back(report_json(r));
    }
    return array.dump(2) + "\n";
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string render_svg(std::span<const CategoryReport> reports) {
    constexpr int kBarWidth = 26;
    constexpr int kBarGap = 6;
    constexpr int kGroupGap = 42;
    constexpr int kPlotHeight = 260;
    constexpr int kMarginLeft = 56;
    constexpr int kMarginTop = 48;
    constexpr int kMarginBottom = 56;
    const int group_width = 3 * kBarWidth + 2 * kBarGap;
    const int width = kMarginLeft + 20 +
                      static_cast<int>(reports.size()) * (group_width + kGroupGap);
    const int height = kMarginTop + kPlotHeight + kMarginBottom;

    std::size_t max_count = 1;
    for (const CategoryReport& r : reports) {
        max_count = std::max({max_count, r.positive, r.negative, r.neutral});
    }

    const auto bar_y = [&](std::size_t count) {
        const double h = kPlotHeight * (static_cast<double>(count) /
                                        static_cast<double>(max_count));
        return std::pair<int, int>{kMarginTop + kPlotHeight - static_cast<int>(h),
                                   static_cast<int>(h)};
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    out << "  <text x=\"" << width / 2
        << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">Sentiment by category"
           "</text>\n";

    // Legend
    constexpr struct {
        const char* label;
        const char* color;
    } kSeries[3] = {{"positive", "#2e7d32"}, {"negative", "#c62828"}, {"neutral", "#9e9e9e"}};
    int legend_x = kMarginLeft;
    for (const auto& series : kSeries) {
        out << "  <rect x=\"" << legend_x << "\" y=\"28\" width=\"10\" height=\"10\" fill=\""
            << series.color << "\"/>\n";
        out << "  <text x=\"" << legend_x + 14 << "\" y=\"38\">" << series.label
            << "</text>\n";
        legend_x += 90;
    }

    // Axes
    out << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << kMarginTop + kPlotHeight
        << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + kPlotHeight
        << "\" x2=\"" << width - 10 << "\" y2=\"" << kMarginTop + kPlotHeight
        << "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const std::size_t value = max_count * tick / 4;
        const int y = kMarginTop + kPlotHeight - kPlotHeight * tick / 4;
        out << "  <text x=\"" << kMarginLeft - 6 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\">" << value << "</text>\n";
    }

    int x = kMarginLeft + kGroupGap / 2;
    for (const CategoryReport& r : reports) {
        out << "  <g class=\"category\">\n";
        const std::size_t counts[3] = {r.positive, r.negative, r.neutral};
        for (int i = 0; i < 3; ++i) {
            const auto [y, h] = bar_y(counts[i]);
            out << "    <rect x=\"" << x + i * (kBarWidth + kBarGap) << "\" y=\"" << y
                << "\" width=\"" << kBarWidth << "\" height=\"" << h << "\" fill=\""
                << kSeries[i].color << "\"/>\n";
        }
        out << "    <text x=\"" << x + group_width / 2 << "\" y=\""
            << kMarginTop + kPlotHeight + 18 << "\" text-anchor=\"middle\">"
            << xml_escape(r.category.name) << "</text>\n";
        out << "  </g>\n";
        x += group_width + kGroupGap;
    }
    out << "</svg>\n";
    return std::move(out).str();
}

const char* to_string(TfMode mode) {
    switch (mode) {
        case TfMode::relative: return "relative";
        case TfMode::raw: return "raw";
        case TfMode::log_scaled: return "log";
    }
    return "relative";
}

const char* to_string(IdfMode mode) {
    switch (mode) {
        case IdfMode::plain: return "plain";
        case IdfMode::smooth: return "smooth";
    }
    return "plain";
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

// Splits one csv record; understands double-quoted fields.
std::vector<std::string> split_csv_record(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::size_t parse_count(const std::string& field) {
    std::size_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw Error("csv: bad count field: " + field);
    }
    return value;
}

}  // namespace

std::vector<CategoryReport> summarize(std::span<const DocumentVerdict> verdicts,
                                      const Corpus& corpus) {
    std::unordered_map<std::string, std::string> category_of;
    category_of.reserve(corpus.documents.size());
    for (const Document& doc : corpus.documents) {
        category_of.emplace(doc.id, doc.category.name);
    }

    std::map<std::string, CategoryReport> by_category;
    for (const DocumentVerdict& verdict : verdicts) {
        auto it = category_of.find(verdict.doc_id);
        if (it == category_of.end()) {
            throw Error("verdict for unknown document id: " + verdict.doc_id);
        }
        CategoryReport& report = by_category[it->second];
        report.category.name = it->second;
        ++report.total;
        switch (verdict.label) {
            case Label::positive: ++report.positive; break;
            case Label::negative: ++report.negative; break;
            case Label::neutral: ++report.neutral; break;
        }
    }

    std::vector<CategoryReport> reports;
    reports.reserve(by_category.size());
    for (auto& [name, report] : by_category) {
        reports.push_back(std::move(report));
    }
    return reports;
}

std::string render(std::span<const CategoryReport> reports, ReportFormat format) {
    for (const CategoryReport& report : reports) {
        check_partition(report);
    }
    if (reports.empty()) {
        throw Error("render: no reports");
    }
    switch (format) {
        case ReportFormat::table: return render_table(reports);
        case ReportFormat::csv: return render_csv(reports);
        case ReportFormat::json: return render_json(reports);
        case ReportFormat::svg: return render_svg(reports);
    }
    throw Error("render: unknown format");
}

std::vector<CategoryReport> parse_csv(std::string_view csv) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < csv.size()) {
        std::size_t pos = csv.find('\n', start);
        if (pos == std::string_view::npos) {
            pos = csv.size();
        }
        lines.push_back(csv.substr(start, pos - start));
        start = pos + 1;
    }
    if (lines.empty() || lines.front() != "category,total,positive,negative,neutral") {
        throw Error("csv: missing or unexpected header");
    }
    std::vector<CategoryReport> reports;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_csv_record(lines[i]);
        if (fields.size() != 5) {
            throw Error("csv: expected 5 fields, got " + std::to_string(fields.size()));
        }
        CategoryReport report;
        report.category.name = fields[0];
        report.total = parse_count(fields[1]);
        report.positive = parse_count(fields[2]);
        report.negative = parse_count(fields[3]);
        report.neutral = parse_count(fields[4]);
        check_partition(report);
        reports.push_back(std::move(report));
    }
    return reports;
}

RunManifest make_manifest(std::string corpus_path, std::string lexicon_path,
                          std::string stopwords_path, const ScoringConfig& cfg,
                          std::vector<CategoryReport> reports) {
    RunManifest manifest;
    manifest.corpus_path = std::move(corpus_path);
    manifest.lexicon_path = std::move(lexicon_path);
    manifest.stopwords_path = std::move(stopwords_path);
    manifest.config = cfg;
    manifest.tool_version = std::string(kVersion);
    manifest.timestamp = iso8601_utc_now();
    manifest.reports = std::move(reports);
    return manifest;
}

std::string render_manifest(const RunManifest& manifest) {
    nlohmann::json doc;
    doc["tool"] = std::string(kToolName);
    doc["version"] = manifest.tool_version;
    doc["timestamp"] = manifest.timestamp;
    doc["corpus"] = manifest.corpus_path;
    doc["lexicon"] = manifest.lexicon_path;
    doc["stopwords"] = manifest.stopwords_path;
    doc["config"] = {{"epsilon", manifest.config.epsilon},
                     {"weighting", to_string(manifest.config.weighting)},
                     {"sense_mode", to_string(manifest.config.sense_mode)},
                     {"min_weight", manifest.config.min_weight},
                     {"tf_mode", to_string(manifest.config.scheme.tf)},
                     {"idf_mode", to_string(manifest.config.scheme.idf)}};
    nlohmann::json reports = nlohmann::json::array();
    for (const CategoryReport& r : manifest.reports) {
        reports.push_back(report_json(r));
    }
    doc["reports"] = reports;

    // Directional claims checked against the run when the four categories
    // they concern are all present.
    std::unordered_map<std::string, const CategoryReport*> by_name;
    for (const CategoryReport& r : manifest.reports) {
        by_name.emplace(r.category.name, &r);
    }
    constexpr struct {
        const char* category;
        bool positive_majority;
    } kClaims[4] = {{"business", true}, {"sport", true}, {"entertainment", false},
                    {"tech", false}};
    const bool evaluable = std::all_of(std::begin(kClaims), std::end(kClaims),
                                       [&](const auto& claim) {
                                           return by_name.count(claim.category) != 0;
                                       });
    if (evaluable) {
        nlohmann::json claims;
        int matched = 0;
        for (const auto& claim : kClaims) {
            const CategoryReport& r = *by_name.at(claim.category);
            const bool holds = claim.positive_majority ? r.positive > r.negative
                                                       : r.negative > r.positive;
            claims[std::string(claim.category) +
                   (claim.positive_majority ? ":positive>negative" : ":negative>positive")] =
                holds;
            matched += holds ? 1 : 0;
        }
        doc["directional_agreement"] = {{"matched", matched}, {"of", 4}, {"claims", claims}};
    }
    return doc.dump(2) + "\n";
}

const char* to_string(ReportFormat format) {
    switch (format) {
        case ReportFormat::table: return "table";
        case ReportFormat::csv: return "csv";
        case ReportFormat::json: return "json";
        case ReportFormat::svg: return "svg";
    }
    return "table";
}

std::optional<ReportFormat> report_format_from_string(std::string_view name) {
    if (name == "table") return ReportFormat::table;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    if (name == "svg") return ReportFormat::svg;
    return std::nullopt;
}

}  // namespace newssent
