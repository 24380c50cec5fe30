#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ewaq/lexicon.hpp"
#include "ewaq/textproc.hpp"

namespace ewaq {

// Cut-offs for the compulsory entailment conditions. Defaults are the
// operating values the scorer ships with.
struct Thresholds {
    double tau1 = 0.095;  // bound on cos_hut - cos_t
    double tau2 = 0.2;    // bound on cos_h - cos_hut
    double tau3 = 0.5;    // floor on max{cos_t, cos_h, cos_hut}
};

enum class Status {
    Success,
    LengthPreconditionFailed,  // passage shorter than question (m < n)
    PrimaryOrderFailed,        // cos_h >= cos_hut >= cos_t violated
    Cond11Failed,              // cos_hut - cos_t > tau1
    Cond12Failed,              // cos_h - cos_hut > tau2
    Cond13Failed,              // max cosine < tau3
    EmptyInput,                // question or passage has no terms
};

const char* to_string(Status s);

// Outcome of scoring one (question, passage) pair. All failure modes are
// statuses rather than errors; callers rank failed passages too.
struct EntailmentScore {
    std::size_t common = 0;        // c: matched question roots
    std::size_t question_len = 0;  // n: distinct question roots
    std::size_t passage_len = 0;   // m: distinct passage roots
    double cos_t = 0.0;
    double cos_h = 0.0;
    double cos_hut = 0.0;
    Status status = Status::EmptyInput;
    std::optional<double> degree;  // == cos_hut, present iff Success

    bool succeeded() const { return status == Status::Success; }
};

// Number of distinct question roots q with some passage root p such that
// q == p or related_roots(lex, q, p). Counted over the question side, so
// the result never exceeds question.length().
std::size_t common_count(const ProcessedText& question,
                         const ProcessedText& passage, const Lexicon& lex);

struct CosineTriple {
    double cos_t;
    double cos_h;
    double cos_hut;
};

// cos_t = sqrt(c/m), cos_h = sqrt(c/n), cos_hut = sqrt(4c^2/((n+c)(m+c))).
// Requires n >= 1, m >= 1, c <= min(n, m); throws std::invalid_argument
// otherwise.
CosineTriple compute_cosines(std::size_t c, std::size_t n, std::size_t m);

// Fixed check order: m >= n, then the primary ordering
// cos_h >= cos_hut >= cos_t, then the three threshold conditions.
// Returns the first failure, or Success. Comparisons are exact IEEE.
Status check_conditions(const CosineTriple& cos, std::size_t c, std::size_t n,
                        std::size_t m, const Thresholds& th);

// Full scorer: EmptyInput when either side has no terms, otherwise
// common_count + compute_cosines + check_conditions; degree is set on
// Success only.
EntailmentScore entailment_score(const ProcessedText& question,
                                 const ProcessedText& passage,
                                 const Lexicon& lex, const Thresholds& th);

} // namespace ewaq
