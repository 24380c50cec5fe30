#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ewaq/entailment.hpp"
#include "ewaq/lexicon.hpp"
#include "ewaq/textproc.hpp"

namespace ewaq {

struct Passage {
    std::string id;
    int source_rank = 1;  // 1-based engine order
    std::string text;
};

struct RankedPassage {
    Passage passage;
    EntailmentScore score;
    int new_rank = 0;  // 1-based position after re-ranking
};

struct Answer {
    std::string sentence;
    std::string passage_id;
    int passage_new_rank = 0;
    double degree = 0.0;
};

using ScoredPassage = std::pair<Passage, EntailmentScore>;

// Orders already-scored passages: successful ones first by degree
// descending, ties and the failed tail by source_rank ascending.
// Assigns new_rank 1..N. The output is a permutation of the input.
std::vector<RankedPassage> order_by_entailment(std::vector<ScoredPassage> scored);

// Scores every passage against the question and orders the result.
// Throws std::invalid_argument if the question has no terms.
std::vector<RankedPassage> rerank(const ProcessedText& question,
                                  const std::vector<Passage>& passages,
                                  const Lexicon& lex, const Thresholds& th,
                                  const TextOptions& opts = {});

// Splits the first min(k, N) ranked passages into sentences, scores each
// sentence against the question, and returns the successful sentence with
// the highest degree. Ties fall to the lower passage rank, then to the
// earlier sentence. Empty result when no sentence succeeds.
std::optional<Answer> extract_answer(const ProcessedText& question,
                                     const std::vector<RankedPassage>& ranked,
                                     const Lexicon& lex, const Thresholds& th,
                                     std::size_t top_k = 5,
                                     const TextOptions& opts = {});

// Best successful sentence of one ranked passage, if any. Exposed for the
// sentence-level evaluation path.
std::optional<Answer> best_sentence(const ProcessedText& question,
                                    const RankedPassage& ranked_passage,
                                    const Lexicon& lex, const Thresholds& th,
                                    const TextOptions& opts = {});

} // namespace ewaq
