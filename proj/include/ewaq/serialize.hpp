#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ewaq/entailment.hpp"
#include "ewaq/evalkit.hpp"
#include "ewaq/pipeline.hpp"
#include "ewaq/textproc.hpp"

namespace ewaq {

// Ordered JSON keeps CLI output byte-stable across runs.
using Json = nlohmann::ordered_json;

Json score_to_json(const EntailmentScore& score);
Json processed_to_json(const ProcessedText& pt);

// {question, ranked: [{id, source_rank, new_rank, status, degree?}],
//  answer: {sentence, passage_id, degree} | null}
Json result_to_json(const std::string& question,
                    const std::vector<RankedPassage>& ranked,
                    const std::optional<Answer>& answer);

Json report_to_json(const EvalReport& report);

// Aligned two-column plain-text rendering of an evaluation report.
std::string report_to_table(const EvalReport& report);
std::string ranked_to_table(const std::vector<RankedPassage>& ranked);

} // namespace ewaq
