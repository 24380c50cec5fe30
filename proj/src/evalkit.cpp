#include "ewaq/evalkit.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "ewaq/error.hpp"
#include "ewaq/pipeline.hpp"
#include "ewaq/utf8.hpp"

namespace ewaq {

bool match_gold(const std::string& candidate, const std::string& gold,
                const Lexicon& lex, const TextOptions& opts) {
    const auto ct = preprocess(candidate, lex, opts).terms;
    const auto gt = preprocess(gold, lex, opts).terms;
    const auto& small = ct.size() <= gt.size() ? ct : gt;
    const auto& big = ct.size() <= gt.size() ? gt : ct;
    if (small.empty()) return false;
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::tuple<double, double, double> metrics(std::size_t correct,
                                           std::size_t answered,
                                           std::size_t total) {
    if (correct > answered || answered > total)
        throw std::invalid_argument("metrics: requires correct <= answered <= total");
    const double p = answered == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(answered);
    const double r = total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
    const double f = (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
    return {p, r, f};
}

double accuracy_at_k(const std::vector<bool>& found_within_k, int k) {
    if (found_within_k.empty()) {
        std::cerr << "ewaq: warning: accuracy@" << k << " over an empty question set\n";
        return 0.0;
    }
    const auto hits = static_cast<double>(
        std::count(found_within_k.begin(), found_within_k.end(), true));
    return hits / static_cast<double>(found_within_k.size());
}

EvalReport run_eval(const std::vector<TestRecord>& testset,
                    const PassageSource& source, const Lexicon& lex,
                    const Thresholds& th, const EvalParams& params,
                    const TextOptions& opts) {
    EvalReport report;
    report.total = testset.size();
    report.k = params.k;

    std::vector<bool> found_flags;
    found_flags.reserve(testset.size());

    for (const auto& rec : testset) {
        const auto passages = source.fetch(rec.question_id, params.limit);
        if (passages.empty()) {
            std::cerr << "ewaq: warning: question '" << rec.question_id
                      << "' has no passages in the run; counted unanswered\n";
            found_flags.push_back(false);
            continue;
        }
        const auto question = preprocess(rec.question, lex, opts);
        if (question.length() == 0) {
            std::cerr << "ewaq: warning: question '" << rec.question_id
                      << "' is empty after preprocessing; counted unanswered\n";
            found_flags.push_back(false);
            continue;
        }
        const auto ranked = rerank(question, passages, lex, th, opts);

        bool found = false;
        const std::size_t cut = std::min<std::size_t>(static_cast<std::size_t>(params.k),
                                                      ranked.size());
        for (std::size_t i = 0; i < cut && !found; ++i) {
            const auto sentence = best_sentence(question, ranked[i], lex, th, opts);
            if (sentence && match_gold(sentence->sentence, rec.gold_answer, lex, opts))
                found = true;
        }
        found_flags.push_back(found);

        const auto answer = extract_answer(question, ranked, lex, th, params.top_k, opts);
        if (answer) {
            ++report.answered;
            if (match_gold(answer->sentence, rec.gold_answer, lex, opts))
                ++report.correct;
        }
    }

    report.accuracy_at_k = accuracy_at_k(found_flags, params.k);
    std::tie(report.precision, report.recall, report.f_measure) =
        metrics(report.correct, report.answered, report.total);
    return report;
}

EvalReport run_eval(const std::vector<TestRecord>& testset, const CorpusRun& run,
                    const Lexicon& lex, const Thresholds& th,
                    const EvalParams& params, const TextOptions& opts) {
    return run_eval(testset, CorpusSource(run), lex, th, params, opts);
}

std::vector<TestRecord> load_testset(const std::filesystem::path& path,
                                     const TextOptions& opts) {
    std::ifstream in(path);
    if (!in.is_open())
        throw LoadError("cannot open test set file: " + path.string());

    const std::string fname = path.filename().string();
    std::vector<TestRecord> records;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        const std::string where = fname + ":" + std::to_string(lineno);
        utf8::decode_or_throw(raw, where);

        nlohmann::json rec = nlohmann::json::parse(raw, nullptr, false);
        if (rec.is_discarded())
            throw LoadError(where + ": invalid JSON");
        for (const char* field : {"question_id", "question", "gold_answer"})
            if (!rec.contains(field) || !rec[field].is_string() ||
                rec[field].get<std::string>().empty())
                throw LoadError(where + ": missing or empty field '" + field + "'");

        TestRecord tr;
        tr.question_id = rec["question_id"].get<std::string>();
        tr.question = rec["question"].get<std::string>();
        tr.gold_answer = rec["gold_answer"].get<std::string>();
        if (!detect_why(tr.question, opts))
            std::cerr << "ewaq: warning: " << where << ": question '" << tr.question_id
                      << "' does not look like a why-question\n";
        records.push_back(std::move(tr));
    }
    return records;
}

} // namespace ewaq
