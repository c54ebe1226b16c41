// Command-line front end: score stdin text or a whole corpus directory and
// emit per-category sentiment reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "newssent/corpus.hpp"
#include "newssent/lexicon.hpp"
#include "newssent/report.hpp"
#include "newssent/scoring.hpp"
#include "newssent/text.hpp"
#include "newssent/version.hpp"

namespace {

constexpr const char* kBuiltinStopwords = "<builtin:english>";

struct ScoreTextOptions {
    std::string lexicon;
    std::string stopwords;
    double epsilon = 0.0;
    std::string sense_mode = "rank";
    std::string weighting = "uniform";  // tfidf is meaningless for one document
};

struct ScoreCorpusOptions {
    std::string corpus;
    std::string lexicon;
    std::string stopwords;
    std::string format = "table";
    std::string out;
    double min_weight = 0.0;
    double epsilon = 0.0;
    std::string sense_mode = "rank";
    std::string weighting = "tfidf";
};

newssent::StopwordList load_stopwords(const std::string& path) {
    if (path.empty()) {
        return newssent::StopwordList::default_english();
    }
    return newssent::StopwordList::from_file(path);
}

newssent::ScoringConfig make_config(double epsilon, const std::string& sense_mode,
                                    const std::string& weighting, double min_weight) {
    newssent::ScoringConfig cfg;
    cfg.epsilon = epsilon;
    cfg.sense_mode = *newssent::sense_mode_from_string(sense_mode);
    cfg.weighting = *newssent::weighting_from_string(weighting);
    cfg.min_weight = min_weight;
    return cfg;
}

int run_score_text(const ScoreTextOptions& opts) {
    std::ostringstream input;
    input << std::cin.rdbuf();

    const newssent::Lexicon lexicon = newssent::load_lexicon(opts.lexicon);
    const newssent::StopwordList stops = load_stopwords(opts.stopwords);
    const newssent::MorphologyRules morph(lexicon.lemma_set());
    const newssent::ScoringConfig cfg =
        make_config(opts.epsilon, opts.sense_mode, opts.weighting, 0.0);

    const newssent::TokenStream stream =
        newssent::preprocess(input.str(), "stdin", stops, morph);
    std::vector<newssent::TokenStream> streams{stream};
    const newssent::VocabularyIndex index = newssent::build_index(streams);
    const newssent::TermWeights weights =
        newssent::compute_weights(stream, index, cfg.scheme);
    const newssent::DocumentVerdict verdict =
        newssent::score_document(stream, weights, lexicon, cfg);

    const nlohmann::json line{{"doc_id", verdict.doc_id},
                              {"score", verdict.score},
                              {"label", newssent::to_string(verdict.label)},
                              {"n_opinion_words", verdict.n_opinion_words},
                              {"weighted_sum", verdict.weighted_sum}};
    std::cout << line.dump() << '\n';
    return 0;
}

int run_score_corpus(const ScoreCorpusOptions& opts) {
    const newssent::Corpus corpus = newssent::load_corpus(opts.corpus);
    for (const std::string& warning : corpus.warnings) {
        std::cerr << "newssent: warning: " << warning << '\n';
    }

    const newssent::Lexicon lexicon = newssent::load_lexicon(opts.lexicon);
    const newssent::StopwordList stops = load_stopwords(opts.stopwords);
    const newssent::ScoringConfig cfg =
        make_config(opts.epsilon, opts.sense_mode, opts.weighting, opts.min_weight);

    const std::vector<newssent::DocumentVerdict> verdicts =
        newssent::score_corpus(corpus, lexicon, stops, cfg);
    const std::vector<newssent::CategoryReport> reports =
        newssent::summarize(verdicts, corpus);
    const std::string rendered =
        newssent::render(reports, *newssent::report_format_from_string(opts.format));

    if (opts.out.empty()) {
        std::cout << rendered;
        return 0;
    }
    {
        std::ofstream out(opts.out, std::ios::binary);
        if (!out || !(out << rendered)) {
            throw newssent::Error("cannot write report file: " + opts.out);
        }
    }
    const newssent::RunManifest manifest = newssent::make_manifest(
        opts.corpus, opts.lexicon, opts.stopwords.empty() ? kBuiltinStopwords : opts.stopwords,
        cfg, reports);
    const std::string manifest_path = opts.out + ".manifest.json";
    std::ofstream manifest_out(manifest_path, std::ios::binary);
    if (!manifest_out || !(manifest_out << newssent::render_manifest(manifest))) {
        throw newssent::Error("cannot write manifest file: " + manifest_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicon-based document sentiment analysis over news corpora"};
    app.set_version_flag("--version",
                         std::string(newssent::kToolName) + " " +
                             std::string(newssent::kVersion));
    app.require_subcommand(1);

    ScoreTextOptions text_opts;
    CLI::App* score_text =
        app.add_subcommand("score-text", "Score text read from stdin, print one JSON verdict");
    score_text->add_option("--lexicon", text_opts.lexicon, "SentiWordNet 3.0 format lexicon file")
        ->required();
    score_text->add_option("--stopwords", text_opts.stopwords,
                           "Stopword file, one word per line (default: builtin English list)");
    score_text->add_option("--epsilon", text_opts.epsilon,
                           "Neutral band: |score| <= epsilon is neutral")
        ->check(CLI::NonNegativeNumber);
    score_text->add_option("--sense-mode", text_opts.sense_mode, "Sense aggregation mode")
        ->check(CLI::IsMember({"first", "rank", "average"}))
        ->capture_default_str();
    score_text
        ->add_option("--weighting", text_opts.weighting,
                     "Term weighting (uniform by default: a single document makes every "
                     "TF-IDF weight zero)")
        ->check(CLI::IsMember({"tfidf", "uniform"}))
        ->capture_default_str();

    ScoreCorpusOptions corpus_opts;
    CLI::App* score_corpus = app.add_subcommand(
        "score-corpus", "Score a <root>/<category>/<file> corpus and emit a category report");
    score_corpus->add_option("--corpus", corpus_opts.corpus, "Corpus root directory")
        ->required();
    score_corpus
        ->add_option("--lexicon", corpus_opts.lexicon, "SentiWordNet 3.0 format lexicon file")
        ->required();
    score_corpus->add_option("--stopwords", corpus_opts.stopwords,
                             "Stopword file (default: builtin English list)");
    score_corpus->add_option("--format", corpus_opts.format, "Report format")
        ->check(CLI::IsMember({"table", "csv", "json", "svg"}))
        ->capture_default_str();
    score_corpus->add_option("--out", corpus_opts.out,
                             "Write the report here (a .manifest.json is written alongside); "
                             "stdout when omitted");
    score_corpus->add_option("--min-weight", corpus_opts.min_weight,
                             "Drop terms whose TF-IDF weight is below this")
        ->check(CLI::NonNegativeNumber);
    score_corpus->add_option("--epsilon", corpus_opts.epsilon,
                             "Neutral band: |score| <= epsilon is neutral")
        ->check(CLI::NonNegativeNumber);
    score_corpus->add_option("--sense-mode", corpus_opts.sense_mode, "Sense aggregation mode")
        ->check(CLI::IsMember({"first", "rank", "average"}))
        ->capture_default_str();
    score_corpus->add_option("--weighting", corpus_opts.weighting, "Term weighting")
        ->check(CLI::IsMember({"tfidf", "uniform"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "newssent: " << e.what() << " (try 'newssent --help')\n";
        return 2;
    }

    try {
        if (score_text->parsed()) {
            return run_score_text(text_opts);
        }
        return run_score_corpus(corpus_opts);
    } catch (const std::exception& e) {
        std::cerr << "newssent: " << e.what() << '\n';
        return 1;
    }
}
