// Directional-cosine entailment scoring between a question (H) and a
// candidate passage (T), with ordered condition checks.

#include "ewaq/entailment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ewaq {

const char* to_string(Status s) {
    switch (s) {
        case Status::Success: return "Success";
        case Status::LengthPreconditionFailed: return "LengthPreconditionFailed";
        case Status::PrimaryOrderFailed: return "PrimaryOrderFailed";
        case Status::Cond11Failed: return "Cond11Failed";
        case Status::Cond12Failed: return "Cond12Failed";
        case Status::Cond13Failed: return "Cond13Failed";
        case Status::EmptyInput: return "EmptyInput";
    }
    return "Unknown";
}

std::size_t common_count(const ProcessedText& question,
                         const ProcessedText& passage, const Lexicon& lex) {
    std::size_t c = 0;
    for (const auto& q : question.terms) {
        if (passage.terms.count(q) != 0) {
            ++c;
            continue;
        }
        for (const auto& p : passage.terms) {
            if (related_roots(lex, q, p)) {
                ++c;
                break;
            }
        }
    }
    return c;
}

CosineTriple compute_cosines(std::size_t c, std::size_t n, std::size_t m) {
    if (n == 0 || m == 0)
        throw std::invalid_argument("compute_cosines: n and m must be >= 1");
    if (c > n || c > m)
        throw std::invalid_argument("compute_cosines: c must not exceed min(n, m)");
    const double cd = static_cast<double>(c);
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    CosineTriple t;
    t.cos_t = std::sqrt(cd / md);
    t.cos_h = std::sqrt(cd / nd);
    t.cos_hut = std::sqrt(4.0 * cd * cd / ((nd + cd) * (md + cd)));
    return t;
}

Status check_conditions(const CosineTriple& cos, std::size_t /*c*/, std::size_t n,
                        std::size_t m, const Thresholds& th) {
    if (m < n) return Status::LengthPreconditionFailed;
    if (!(cos.cos_h >= cos.cos_hut && cos.cos_hut >= cos.cos_t))
        return Status::PrimaryOrderFailed;
    if (cos.cos_hut - cos.cos_t > th.tau1) return Status::Cond11Failed;
    if (cos.cos_h - cos.cos_hut > th.tau2) return Status::Cond12Failed;
    if (std::max({cos.cos_t, cos.cos_h, cos.cos_hut}) < th.tau3)
        return Status::Cond13Failed;
    return Status::Success;
}

EntailmentScore entailment_score(const ProcessedText& question,
                                 const ProcessedText& passage,
                                 const Lexicon& lex, const Thresholds& th) {
    EntailmentScore score;
    score.question_len = question.length();
    score.passage_len = passage.length();
    if (score.question_len == 0 || score.passage_len == 0) {
        score.status = Status::EmptyInput;
        return score;
    }
    score.common = common_count(question, passage, lex);
    const auto cos = compute_cosines(score.common, score.question_len, score.passage_len);
    score.cos_t = cos.cos_t;
    score.cos_h = cos.cos_h;
    score.cos_hut = cos.cos_hut;
    score.status = check_conditions(cos, score.common, score.question_len,
                                    score.passage_len, th);
    if (score.status == Status::Success) score.degree = score.cos_hut;
    return score;
}

} // namespace ewaq
