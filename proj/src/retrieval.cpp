#include "ewaq/retrieval.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <utility>

#include <json.hpp>

#include "ewaq/error.hpp"
#include "ewaq/utf8.hpp"

namespace ewaq {

CorpusRun load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in.is_open())
        throw LoadError("cannot open corpus file: " + path.string());

    const std::string fname = path.filename().string();
    CorpusRun run;
    std::set<std::pair<std::string, int>> seen_ranks;
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
        for (const char* field : {"question_id", "rank", "id", "text"})
            if (!rec.contains(field))
                throw LoadError(where + ": missing field '" + field + "'");
        if (!rec["question_id"].is_string() || !rec["id"].is_string() ||
            !rec["text"].is_string() || !rec["rank"].is_number_integer())
            throw LoadError(where + ": field has wrong type");

        Passage p;
        p.id = rec["id"].get<std::string>();
        p.source_rank = rec["rank"].get<int>();
        p.text = rec["text"].get<std::string>();
        const auto qid = rec["question_id"].get<std::string>();
        if (p.source_rank < 1)
            throw LoadError(where + ": rank must be >= 1");
        if (p.text.empty())
            throw LoadError(where + ": empty passage text");
        if (!seen_ranks.insert({qid, p.source_rank}).second)
            throw LoadError(where + ": duplicate rank " + std::to_string(p.source_rank) +
                            " for question '" + qid + "'");
        run.by_question[qid].push_back(std::move(p));
    }

    // Ranks must form 1..N per question; ids must be unique per question.
    for (auto& [qid, passages] : run.by_question) {
        std::sort(passages.begin(), passages.end(),
                  [](const Passage& a, const Passage& b) {
                      return a.source_rank < b.source_rank;
                  });
        std::set<std::string> ids;
        for (std::size_t i = 0; i < passages.size(); ++i) {
            if (passages[i].source_rank != static_cast<int>(i) + 1)
                throw LoadError(fname + ": question '" + qid + "': rank gap, expected " +
                                std::to_string(i + 1) + " got " +
                                std::to_string(passages[i].source_rank));
            if (!ids.insert(passages[i].id).second)
                throw LoadError(fname + ": question '" + qid + "': duplicate passage id '" +
                                passages[i].id + "'");
        }
    }
    return run;
}

std::vector<Passage> fetch(const CorpusRun& run, const std::string& question_id,
                           std::size_t limit) {
    auto it = run.by_question.find(question_id);
    if (it == run.by_question.end()) return {};
    const auto& all = it->second;
    const std::size_t count = std::min(limit, all.size());
    return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count)};
}

} // namespace ewaq
