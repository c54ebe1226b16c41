// Category summaries, the four report renderers, csv round-trip, manifest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "newssent/report.hpp"
#include "testutil.hpp"

using newssent::Category;
using newssent::CategoryReport;
using newssent::Corpus;
using newssent::DocumentVerdict;
using newssent::Label;
using newssent::ReportFormat;

namespace {

Corpus two_category_corpus() {
    Corpus corpus;
    corpus.categories = {{"business"}, {"sport"}};
    corpus.documents.push_back({"business/1", {"business"}, ""});
    corpus.documents.push_back({"business/2", {"business"}, ""});
    corpus.documents.push_back({"sport/1", {"sport"}, ""});
    return corpus;
}

DocumentVerdict verdict(std::string id, Label label) {
    return DocumentVerdict{std::move(id), 0.0, label, 0, 0.0};
}

std::vector<CategoryReport> sample_reports() {
    return {{{"business"}, 2, 1, 0, 1}, {{"sport"}, 1, 0, 1, 0}};
}

}  // namespace

TEST_CASE("summarize counts labels per category") {
    const Corpus corpus = two_category_corpus();
    const std::vector<DocumentVerdict> verdicts{verdict("business/1", Label::positive),
                                                verdict("business/2", Label::neutral),
                                                verdict("sport/1", Label::negative)};
    const auto reports = newssent::summarize(verdicts, corpus);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].category.name == "business");
    CHECK(reports[0].total == 2);
    CHECK(reports[0].positive == 1);
    CHECK(reports[0].negative == 0);
    CHECK(reports[0].neutral == 1);
    CHECK(reports[1].category.name == "sport");
    CHECK(reports[1].total == 1);
    CHECK(reports[1].negative == 1);
}

TEST_CASE("summarize only reports categories that produced verdicts") {
    Corpus corpus = two_category_corpus();
    corpus.categories.push_back({"tech"});  // no tech documents
    const std::vector<DocumentVerdict> verdicts{verdict("business/1", Label::positive)};
    const auto reports = newssent::summarize(verdicts, corpus);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].category.name == "business");
}

TEST_CASE("summarize rejects a verdict with an unknown id") {
    const Corpus corpus = two_category_corpus();
    const std::vector<DocumentVerdict> verdicts{verdict("nowhere/9", Label::neutral)};
    CHECK_THROWS_AS(newssent::summarize(verdicts, corpus), newssent::Error);
}

TEST_CASE("csv rendering is exact") {
    const std::vector<CategoryReport> reports{{{"business"}, 2, 1, 0, 1}};
    CHECK(newssent::render(reports, ReportFormat::csv) ==
          "category,total,positive,negative,neutral\nbusiness,2,1,0,1\n");
}

TEST_CASE("csv round-trips losslessly, including awkward names") {
    std::vector<CategoryReport> reports = sample_reports();
    reports.push_back({{"odd,name \"x\""}, 3, 1, 1, 1});
    const std::string csv = newssent::render(reports, ReportFormat::csv);
    const auto parsed = newssent::parse_csv(csv);
    CHECK(parsed == reports);
}

TEST_CASE("parse_csv validates header, fields and partition") {
    CHECK_THROWS_AS(newssent::parse_csv("nope\n"), newssent::Error);
    CHECK_THROWS_AS(
        newssent::parse_csv("category,total,positive,negative,neutral\nx,1,2\n"),
        newssent::Error);
    CHECK_THROWS_AS(
        newssent::parse_csv("category,total,positive,negative,neutral\nx,5,1,1,1\n"),
        newssent::Error);
    CHECK_THROWS_AS(
        newssent::parse_csv("category,total,positive,negative,neutral\nx,2,1,0,one\n"),
        newssent::Error);
}

TEST_CASE("table format mirrors the expected column headings") {
    const std::string table = newssent::render(sample_reports(), ReportFormat::table);
    CHECK(table.find("NEWS CLASS") != std::string::npos);
    CHECK(table.find("TOTAL ARTICLES") != std::string::npos);
    CHECK(table.find("POSITIVE") != std::string::npos);
    CHECK(table.find("NEGATIVE") != std::string::npos);
    CHECK(table.find("NEUTRAL") != std::string::npos);
    CHECK(table.find("business") != std::string::npos);
}

TEST_CASE("json format carries one object per category") {
    const std::string text = newssent::render(sample_reports(), ReportFormat::json);
    const nlohmann::json doc = nlohmann::json::parse(text);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["category"] == "business");
    CHECK(doc[0]["total"] == 2);
    CHECK(doc[0]["positive"] == 1);
    CHECK(doc[1]["category"] == "sport");
    CHECK(doc[1]["negative"] == 1);
}

TEST_CASE("svg output is well-formed with one bar group per category") {
    std::vector<CategoryReport> reports = sample_reports();
    reports.push_back({{"A&B <news>"}, 1, 1, 0, 0});  // must be escaped
    const std::string svg = newssent::render(reports, ReportFormat::svg);
    std::string why;
    CHECK_MESSAGE(testutil::well_formed_xml(svg, &why), why);
    std::size_t groups = 0;
    for (std::size_t at = svg.find("<g class=\"category\">"); at != std::string::npos;
         at = svg.find("<g class=\"category\">", at + 1)) {
        ++groups;
    }
    CHECK(groups == reports.size());
    CHECK(svg.find("A&amp;B &lt;news&gt;") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("render re-checks the count partition") {
    const std::vector<CategoryReport> broken{{{"x"}, 5, 1, 1, 1}};
    for (const auto format : {ReportFormat::table, ReportFormat::csv, ReportFormat::json,
                              ReportFormat::svg}) {
        CHECK_THROWS_AS(newssent::render(broken, format), newssent::Error);
    }
}

TEST_CASE("render rejects an empty report list") {
    const std::vector<CategoryReport> none;
    CHECK_THROWS_AS(newssent::render(none, ReportFormat::csv), newssent::Error);
}

TEST_CASE("rendering is deterministic") {
    const auto reports = sample_reports();
    for (const auto format : {ReportFormat::table, ReportFormat::csv, ReportFormat::json,
                              ReportFormat::svg}) {
        CHECK(newssent::render(reports, format) == newssent::render(reports, format));
    }
}

TEST_CASE("manifest records inputs, config and reports") {
    newssent::ScoringConfig cfg;
    cfg.epsilon = 0.05;
    cfg.weighting = newssent::TermWeighting::uniform;
    cfg.sense_mode = newssent::SenseMode::average;
    cfg.min_weight = 0.01;
    const auto manifest = newssent::make_manifest("corpus/dir", "lex.txt", "stops.txt",
                                                  cfg, sample_reports());
    const nlohmann::json doc = nlohmann::json::parse(newssent::render_manifest(manifest));
    CHECK(doc["tool"] == "newssent");
    CHECK(doc["corpus"] == "corpus/dir");
    CHECK(doc["lexicon"] == "lex.txt");
    CHECK(doc["stopwords"] == "stops.txt");
    CHECK(doc["config"]["epsilon"] == 0.05);
    CHECK(doc["config"]["weighting"] == "uniform");
    CHECK(doc["config"]["sense_mode"] == "average");
    CHECK(doc["config"]["min_weight"] == 0.01);
    CHECK(doc["reports"].size() == 2);
    CHECK(!doc["timestamp"].get<std::string>().empty());
    CHECK(!doc["version"].get<std::string>().empty());
    // only two of the four directional categories present -> no block
    CHECK(!doc.contains("directional_agreement"));
}

TEST_CASE("manifest evaluates the four directional claims when possible") {
    const std::vector<CategoryReport> reports{
        {{"business"}, 10, 6, 3, 1},       // positive majority: claim holds
        {{"entertainment"}, 10, 6, 3, 1},  // negative majority claimed: fails
        {{"politics"}, 10, 5, 5, 0},       // not part of any claim
        {{"sport"}, 10, 2, 7, 1},          // positive majority claimed: fails
        {{"tech"}, 10, 1, 8, 1},           // negative majority: claim holds
    };
    const auto manifest =
        newssent::make_manifest("c", "l", "<builtin:english>", {}, reports);
    const nlohmann::json doc = nlohmann::json::parse(newssent::render_manifest(manifest));
    REQUIRE(doc.contains("directional_agreement"));
    CHECK(doc["directional_agreement"]["matched"] == 2);
    CHECK(doc["directional_agreement"]["of"] == 4);
    const auto& claims = doc["directional_agreement"]["claims"];
    CHECK(claims["business:positive>negative"] == true);
    CHECK(claims["sport:positive>negative"] == false);
    CHECK(claims["entertainment:negative>positive"] == false);
    CHECK(claims["tech:negative>positive"] == true);
}
