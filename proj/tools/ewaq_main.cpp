// Command-line front end: preprocess, score, rerank, answer and eval over
// files and inline strings. Exactly one JSON document (or table) goes to
// stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 entailment failed (score), 2 no answer,
// 64 usage error, 65 data-format error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ewaq/error.hpp"
#include "ewaq/evalkit.hpp"
#include "ewaq/pipeline.hpp"
#include "ewaq/retrieval.hpp"
#include "ewaq/serialize.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitEntailmentFailed = 1;
constexpr int kExitNoAnswer = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDataFormat = 65;

struct CliConfig {
    std::string lexicon_dir;
    ewaq::Thresholds thresholds;
    std::size_t top_k = 5;
    std::size_t limit = 7;
    int eval_k = 3;
    std::string output = "json";
    std::string delimiters;
    bool fold_taa_marbuta = false;

    ewaq::TextOptions text_options() const {
        ewaq::TextOptions opts;
        opts.fold_taa_marbuta = fold_taa_marbuta;
        opts.extra_sentence_delimiters = delimiters;
        return opts;
    }
};

ewaq::Lexicon load_configured_lexicon(const CliConfig& cfg) {
    if (cfg.lexicon_dir.empty()) return {};
    return ewaq::load_lexicon(cfg.lexicon_dir);
}

void emit(const ewaq::Json& doc) { std::cout << doc.dump(2) << "\n"; }

// Picks the question id: explicit flag, else the corpus' sole question.
std::optional<std::string> resolve_question_id(const ewaq::CorpusRun& run,
                                               const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (run.question_count() == 1) return run.by_question.begin()->first;
    std::cerr << "ewaq: error: corpus holds " << run.question_count()
              << " questions; pass --question-id\n";
    return std::nullopt;
}

int cmd_preprocess(const CliConfig& cfg, const std::string& text) {
    const auto lex = load_configured_lexicon(cfg);
    emit(ewaq::processed_to_json(ewaq::preprocess(text, lex, cfg.text_options())));
    return kExitSuccess;
}

int cmd_score(const CliConfig& cfg, const std::string& question,
              const std::string& passage) {
    const auto lex = load_configured_lexicon(cfg);
    const auto opts = cfg.text_options();
    const auto q = ewaq::preprocess(question, lex, opts);
    if (q.length() == 0) {
        std::cerr << "ewaq: error: question is empty after preprocessing\n";
        return kExitUsage;
    }
    const auto p = ewaq::preprocess(passage, lex, opts);
    const auto score = ewaq::entailment_score(q, p, lex, cfg.thresholds);
    emit(ewaq::score_to_json(score));
    return score.succeeded() ? kExitSuccess : kExitEntailmentFailed;
}

int cmd_rerank(const CliConfig& cfg, const std::string& question,
               const std::string& corpus_path, const std::string& question_id) {
    const auto lex = load_configured_lexicon(cfg);
    const auto opts = cfg.text_options();
    const auto run = ewaq::load_corpus(corpus_path);
    const auto qid = resolve_question_id(run, question_id);
    if (!qid) return kExitUsage;
    const auto q = ewaq::preprocess(question, lex, opts);
    if (q.length() == 0) {
        std::cerr << "ewaq: error: question is empty after preprocessing\n";
        return kExitUsage;
    }
    const auto passages = ewaq::fetch(run, *qid, cfg.limit);
    const auto ranked = ewaq::rerank(q, passages, lex, cfg.thresholds, opts);
    if (cfg.output == "table")
        std::cout << ewaq::ranked_to_table(ranked);
    else
        emit(ewaq::result_to_json(question, ranked, std::nullopt));
    return kExitSuccess;
}

int cmd_answer(const CliConfig& cfg, const std::string& question,
               const std::string& corpus_path, const std::string& question_id) {
    const auto lex = load_configured_lexicon(cfg);
    const auto opts = cfg.text_options();
    const bool is_why = ewaq::detect_why(question, opts);
    if (!is_why)
        std::cerr << "ewaq: warning: question does not look like a why-question; "
                     "answering anyway\n";
    const auto run = ewaq::load_corpus(corpus_path);
    const auto qid = resolve_question_id(run, question_id);
    if (!qid) return kExitUsage;
    const auto q = ewaq::preprocess(question, lex, opts);
    if (q.length() == 0) {
        std::cerr << "ewaq: error: question is empty after preprocessing\n";
        return kExitUsage;
    }
    const auto passages = ewaq::fetch(run, *qid, cfg.limit);
    const auto ranked = ewaq::rerank(q, passages, lex, cfg.thresholds, opts);
    const auto answer =
        ewaq::extract_answer(q, ranked, lex, cfg.thresholds, cfg.top_k, opts);

    auto doc = ewaq::result_to_json(question, ranked, answer);
    doc["is_why_question"] = is_why;
    emit(doc);
    return answer ? kExitSuccess : kExitNoAnswer;
}

int cmd_eval(const CliConfig& cfg, const std::string& testset_path,
             const std::string& corpus_path) {
    const auto lex = load_configured_lexicon(cfg);
    const auto opts = cfg.text_options();
    const auto testset = ewaq::load_testset(testset_path, opts);
    const auto run = ewaq::load_corpus(corpus_path);
    ewaq::EvalParams params;
    params.k = cfg.eval_k;
    params.limit = cfg.limit;
    params.top_k = cfg.top_k;
    const auto report = ewaq::run_eval(testset, run, lex, cfg.thresholds, params, opts);
    if (cfg.output == "table")
        std::cout << ewaq::report_to_table(report);
    else
        emit(ewaq::report_to_json(report));
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entailment-based passage re-ranking and answer extraction "
                 "for Arabic why-questions"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("--lexicon-dir", cfg.lexicon_dir,
                   "Directory with stopwords.txt, roots.tsv, relations.tsv")
        ->envname("EWAQ_LEXICON_DIR")
        ->check(CLI::ExistingDirectory);
    app.add_option("--tau1", cfg.thresholds.tau1, "Bound on cos_hut - cos_t")
        ->check(CLI::Range(0.0, 1.0))->capture_default_str();
    app.add_option("--tau2", cfg.thresholds.tau2, "Bound on cos_h - cos_hut")
        ->check(CLI::Range(0.0, 1.0))->capture_default_str();
    app.add_option("--tau3", cfg.thresholds.tau3, "Floor on the max cosine")
        ->check(CLI::Range(0.0, 1.0))->capture_default_str();
    app.add_option("--top-k", cfg.top_k, "Passages scanned by answer extraction")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--limit", cfg.limit, "Passages fetched per question")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--k", cfg.eval_k, "Accuracy rank cut-off for eval")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--output", cfg.output, "Output format")
        ->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    app.add_option("--delimiters", cfg.delimiters,
                   "Extra sentence delimiters in addition to '.'");
    app.add_flag("--fold-taa-marbuta", cfg.fold_taa_marbuta,
                 "Fold taa marbuta to heh during normalization");

    std::string text, question, passage, corpus_path, testset_path, question_id;

    auto* sub_pre = app.add_subcommand("preprocess", "Normalize, filter and stem a text");
    sub_pre->add_option("--text", text, "Input text")->required();

    auto* sub_score = app.add_subcommand("score", "Score one question/passage pair");
    sub_score->add_option("--question", question, "The why-question")->required();
    sub_score->add_option("--passage", passage, "Candidate passage")->required();

    auto* sub_rerank = app.add_subcommand("rerank", "Re-rank a stored retrieval run");
    sub_rerank->add_option("--question", question, "The why-question")->required();
    sub_rerank->add_option("--corpus", corpus_path, "JSONL corpus file")
        ->required()->check(CLI::ExistingFile);
    sub_rerank->add_option("--question-id", question_id, "Question id within the corpus");

    auto* sub_answer = app.add_subcommand("answer", "Extract the best answer sentence");
    sub_answer->add_option("--question", question, "The why-question")->required();
    sub_answer->add_option("--corpus", corpus_path, "JSONL corpus file")
        ->required()->check(CLI::ExistingFile);
    sub_answer->add_option("--question-id", question_id, "Question id within the corpus");

    auto* sub_eval = app.add_subcommand("eval", "Score a test set against a run");
    sub_eval->add_option("--testset", testset_path, "JSONL test set file")
        ->required()->check(CLI::ExistingFile);
    sub_eval->add_option("--corpus", corpus_path, "JSONL corpus file")
        ->required()->check(CLI::ExistingFile);

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message
        return kExitUsage;
    }

    try {
        if (sub_pre->parsed()) return cmd_preprocess(cfg, text);
        if (sub_score->parsed()) return cmd_score(cfg, question, passage);
        if (sub_rerank->parsed()) return cmd_rerank(cfg, question, corpus_path, question_id);
        if (sub_answer->parsed()) return cmd_answer(cfg, question, corpus_path, question_id);
        if (sub_eval->parsed()) return cmd_eval(cfg, testset_path, corpus_path);
    } catch (const ewaq::LoadError& e) {
        std::cerr << "ewaq: error: " << e.what() << "\n";
        return kExitDataFormat;
    } catch (const std::exception& e) {
        std::cerr << "ewaq: error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
