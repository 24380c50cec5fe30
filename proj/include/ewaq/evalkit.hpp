#pragma once

#include <filesystem>
#include <string>
#include <tuple>
#include <vector>

#include "ewaq/lexicon.hpp"
#include "ewaq/retrieval.hpp"

namespace ewaq {

struct TestRecord {
    std::string question_id;
    std::string question;
    std::string gold_answer;
};

struct EvalReport {
    std::size_t total = 0;     // questions to be answered
    std::size_t answered = 0;  // questions with an extracted answer
    std::size_t correct = 0;   // answered and matching gold
    double accuracy_at_k = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    int k = 3;
};

// Deterministic stand-in for human answer judgment: after preprocessing,
// one term set must contain the other and the smaller one must be
// non-empty.
bool match_gold(const std::string& candidate, const std::string& gold,
                const Lexicon& lex, const TextOptions& opts = {});

// precision = correct/answered, recall = correct/total,
// F = 2PR/(P+R); each defined as 0 when its denominator is 0.
// Requires correct <= answered <= total.
std::tuple<double, double, double> metrics(std::size_t correct,
                                           std::size_t answered,
                                           std::size_t total);

// Fraction of true flags; 0 with a warning on an empty list. k is only
// reported in the diagnostic.
double accuracy_at_k(const std::vector<bool>& found_within_k, int k);

struct EvalParams {
    int k = 3;                // accuracy rank cut-off
    std::size_t limit = 7;    // passages fetched per question
    std::size_t top_k = 5;    // passages scanned by answer extraction
};

// Full harness: fetch -> rerank -> extract per record. A question counts
// as found for accuracy when the gold matches the best sentence of one of
// the first k re-ranked passages. Questions absent from the source count
// as unanswered (diagnostic to stderr).
EvalReport run_eval(const std::vector<TestRecord>& testset,
                    const PassageSource& source, const Lexicon& lex,
                    const Thresholds& th, const EvalParams& params = {},
                    const TextOptions& opts = {});

// Convenience over a loaded run file.
EvalReport run_eval(const std::vector<TestRecord>& testset, const CorpusRun& run,
                    const Lexicon& lex, const Thresholds& th,
                    const EvalParams& params = {}, const TextOptions& opts = {});

// JSON-lines {question_id, question, gold_answer}. Empty fields are load
// errors; a record that is not a why-question only warns.
std::vector<TestRecord> load_testset(const std::filesystem::path& path,
                                     const TextOptions& opts = {});

} // namespace ewaq
