#include "ewaq/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace ewaq {

Json score_to_json(const EntailmentScore& s) {
    Json j;
    j["c"] = s.common;
    j["n"] = s.question_len;
    j["m"] = s.passage_len;
    j["cos_t"] = s.cos_t;
    j["cos_h"] = s.cos_h;
    j["cos_hut"] = s.cos_hut;
    j["status"] = to_string(s.status);
    if (s.degree) j["degree"] = *s.degree;
    return j;
}

Json processed_to_json(const ProcessedText& pt) {
    Json j;
    j["tokens"] = Json::array();
    for (const auto& t : pt.tokens) {
        Json tok;
        tok["surface"] = t.surface;
        tok["normalized"] = t.normalized;
        tok["root"] = t.root;
        j["tokens"].push_back(std::move(tok));
    }
    j["terms"] = pt.terms;  // std::set keeps them sorted
    j["length"] = pt.length();
    return j;
}

Json result_to_json(const std::string& question,
                    const std::vector<RankedPassage>& ranked,
                    const std::optional<Answer>& answer) {
    Json j;
    j["question"] = question;
    j["ranked"] = Json::array();
    for (const auto& rp : ranked) {
        Json item;
        item["id"] = rp.passage.id;
        item["source_rank"] = rp.passage.source_rank;
        item["new_rank"] = rp.new_rank;
        item["status"] = to_string(rp.score.status);
        if (rp.score.degree) item["degree"] = *rp.score.degree;
        j["ranked"].push_back(std::move(item));
    }
    if (answer) {
        Json a;
        a["sentence"] = answer->sentence;
        a["passage_id"] = answer->passage_id;
        a["degree"] = answer->degree;
        j["answer"] = std::move(a);
    } else {
        j["answer"] = nullptr;
    }
    return j;
}

Json report_to_json(const EvalReport& r) {
    Json j;
    j["total"] = r.total;
    j["answered"] = r.answered;
    j["correct"] = r.correct;
    j["accuracy_at_k"] = r.accuracy_at_k;
    j["precision"] = r.precision;
    j["recall"] = r.recall;
    j["f_measure"] = r.f_measure;
    j["k"] = r.k;
    return j;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    return os.str();
}

void row(std::ostream& os, const std::string& name, const std::string& value) {
    os << std::left << std::setw(14) << name << std::right << std::setw(10) << value << "\n";
}

} // namespace

std::string report_to_table(const EvalReport& r) {
    std::ostringstream os;
    row(os, "metric", "value");
    row(os, "total", std::to_string(r.total));
    row(os, "answered", std::to_string(r.answered));
    row(os, "correct", std::to_string(r.correct));
    row(os, "accuracy@" + std::to_string(r.k), fmt(r.accuracy_at_k));
    row(os, "precision", fmt(r.precision));
    row(os, "recall", fmt(r.recall));
    row(os, "f_measure", fmt(r.f_measure));
    return os.str();
}

std::string ranked_to_table(const std::vector<RankedPassage>& ranked) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "new_rank" << std::setw(12) << "source_rank"
       << std::setw(16) << "id" << std::setw(26) << "status" << "degree\n";
    for (const auto& rp : ranked) {
        os << std::left << std::setw(10) << rp.new_rank
           << std::setw(12) << rp.passage.source_rank
           << std::setw(16) << rp.passage.id
           << std::setw(26) << to_string(rp.score.status)
           << (rp.score.degree ? fmt(*rp.score.degree) : "----") << "\n";
    }
    return os.str();
}

} // namespace ewaq
