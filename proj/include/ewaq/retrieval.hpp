#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ewaq/pipeline.hpp"

namespace ewaq {

// Stored retrieval runs keyed by question id; passages kept in engine
// rank order. Immutable after load.
struct CorpusRun {
    std::map<std::string, std::vector<Passage>> by_question;

    std::size_t question_count() const { return by_question.size(); }
    bool has_question(const std::string& qid) const {
        return by_question.count(qid) != 0;
    }
};

// Parses a JSON-lines file with fields {question_id, rank, id, text}.
// Validates that per question the ranks are 1..N without duplicates or
// gaps and the ids are unique. Raises LoadError with a line number on
// the first violation.
CorpusRun load_corpus(const std::filesystem::path& path);

// First min(limit, available) passages in rank order; empty for an
// unknown question id.
std::vector<Passage> fetch(const CorpusRun& run, const std::string& question_id,
                           std::size_t limit);

// Where the pipeline gets its passages. Stored runs are the bundled
// implementation; a live HTTP-backed source can slot in behind the same
// two-argument fetch without touching the pipeline.
class PassageSource {
public:
    virtual ~PassageSource() = default;
    virtual std::vector<Passage> fetch(const std::string& question_id,
                                       std::size_t limit) const = 0;
};

class CorpusSource final : public PassageSource {
public:
    explicit CorpusSource(const CorpusRun& run) : run_(&run) {}
    std::vector<Passage> fetch(const std::string& question_id,
                               std::size_t limit) const override {
        return ewaq::fetch(*run_, question_id, limit);
    }

private:
    const CorpusRun* run_;
};

} // namespace ewaq
