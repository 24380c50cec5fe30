#include "ewaq/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace ewaq {

std::vector<RankedPassage> order_by_entailment(std::vector<ScoredPassage> scored) {
    std::sort(scored.begin(), scored.end(),
              [](const ScoredPassage& a, const ScoredPassage& b) {
                  const bool sa = a.second.succeeded();
                  const bool sb = b.second.succeeded();
                  if (sa != sb) return sa;  // successes ahead of failures
                  if (sa && sb && a.second.degree != b.second.degree)
                      return *a.second.degree > *b.second.degree;
                  return a.first.source_rank < b.first.source_rank;
              });
    std::vector<RankedPassage> out;
    out.reserve(scored.size());
    int rank = 1;
    for (auto& sp : scored)
        out.push_back(RankedPassage{std::move(sp.first), std::move(sp.second), rank++});
    return out;
}

std::vector<RankedPassage> rerank(const ProcessedText& question,
                                  const std::vector<Passage>& passages,
                                  const Lexicon& lex, const Thresholds& th,
                                  const TextOptions& opts) {
    if (question.length() == 0)
        throw std::invalid_argument("rerank: empty question");
    std::vector<ScoredPassage> scored;
    scored.reserve(passages.size());
    for (const auto& p : passages) {
        const auto pt = preprocess(p.text, lex, opts);
        scored.emplace_back(p, entailment_score(question, pt, lex, th));
    }
    return order_by_entailment(std::move(scored));
}

std::optional<Answer> best_sentence(const ProcessedText& question,
                                    const RankedPassage& rp,
                                    const Lexicon& lex, const Thresholds& th,
                                    const TextOptions& opts) {
    std::optional<Answer> best;
    for (const auto& sentence : split_sentences(rp.passage.text, opts)) {
        const auto st = preprocess(sentence, lex, opts);
        const auto score = entailment_score(question, st, lex, th);
        if (!score.succeeded()) continue;
        // Earlier sentence wins ties within a passage, so strict >.
        if (!best || *score.degree > best->degree) {
            best = Answer{sentence, rp.passage.id, rp.new_rank, *score.degree};
        }
    }
    return best;
}

std::optional<Answer> extract_answer(const ProcessedText& question,
                                     const std::vector<RankedPassage>& ranked,
                                     const Lexicon& lex, const Thresholds& th,
                                     std::size_t top_k,
                                     const TextOptions& opts) {
    std::optional<Answer> best;
    const std::size_t limit = std::min(top_k, ranked.size());
    for (std::size_t i = 0; i < limit; ++i) {
        auto candidate = best_sentence(question, ranked[i], lex, th, opts);
        if (!candidate) continue;
        // Ranked order is ascending new_rank, so on equal degree the
        // earlier passage already held wins.
        if (!best || candidate->degree > best->degree) best = std::move(candidate);
    }
    return best;
}

} // namespace ewaq
