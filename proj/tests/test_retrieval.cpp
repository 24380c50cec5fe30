#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ewaq/error.hpp"
#include "ewaq/retrieval.hpp"

using namespace ewaq;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& content) {
        path = fs::temp_directory_path() /
               ("ewaq-run-" + std::to_string(std::random_device{}()) + ".jsonl");
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { fs::remove(path); }
};

std::string line(const std::string& qid, int rank, const std::string& id,
                 const std::string& text) {
    nlohmann::json j;
    j["question_id"] = qid;
    j["rank"] = rank;
    j["id"] = id;
    j["text"] = text;
    return j.dump() + "\n";
}

std::string seven_passages() {
    std::string s;
    for (int r = 1; r <= 7; ++r)
        s += line("q1", r, "q1-p" + std::to_string(r), "passage " + std::to_string(r));
    return s;
}

} // namespace

TEST_CASE("seven ranked lines load as one question") {
    TempFile f(seven_passages());
    const auto run = load_corpus(f.path);
    CHECK(run.question_count() == 1);
    const auto got = fetch(run, "q1", 7);
    REQUIRE(got.size() == 7);
    for (int i = 0; i < 7; ++i) CHECK(got[static_cast<std::size_t>(i)].source_rank == i + 1);
}

TEST_CASE("fetch truncates to the limit in rank order") {
    TempFile f(seven_passages());
    const auto run = load_corpus(f.path);
    const auto got = fetch(run, "q1", 3);
    REQUIRE(got.size() == 3);
    CHECK(got[0].source_rank == 1);
    CHECK(got[2].source_rank == 3);
}

TEST_CASE("fetch of an unknown question id is empty") {
    TempFile f(seven_passages());
    CHECK(fetch(load_corpus(f.path), "nope", 7).empty());
}

TEST_CASE("an empty file is an empty run") {
    TempFile f("");
    CHECK(load_corpus(f.path).question_count() == 0);
}

TEST_CASE("a duplicate rank is rejected with its line number") {
    std::string s = line("q1", 1, "a", "x") + line("q1", 3, "b", "y") +
                    line("q1", 3, "c", "z");
    TempFile f(s);
    CHECK_THROWS_WITH_AS(load_corpus(f.path), doctest::Contains(":3"), LoadError);
}

TEST_CASE("a missing field is rejected") {
    TempFile f("{\"question_id\":\"q1\",\"rank\":1,\"text\":\"x\"}\n");
    CHECK_THROWS_WITH_AS(load_corpus(f.path), doctest::Contains("missing field"),
                         LoadError);
}

TEST_CASE("a rank gap is rejected") {
    std::string s = line("q1", 1, "a", "x") + line("q1", 3, "b", "y");
    TempFile f(s);
    CHECK_THROWS_WITH_AS(load_corpus(f.path), doctest::Contains("rank gap"), LoadError);
}

TEST_CASE("invalid JSON is rejected with its line number") {
    TempFile f(line("q1", 1, "a", "x") + "{broken\n");
    CHECK_THROWS_WITH_AS(load_corpus(f.path), doctest::Contains(":2"), LoadError);
}

TEST_CASE("empty passage text is rejected") {
    TempFile f(line("q1", 1, "a", ""));
    CHECK_THROWS_AS(load_corpus(f.path), LoadError);
}

TEST_CASE("duplicate passage ids within a question are rejected") {
    TempFile f(line("q1", 1, "same", "x") + line("q1", 2, "same", "y"));
    CHECK_THROWS_WITH_AS(load_corpus(f.path), doctest::Contains("duplicate passage id"),
                         LoadError);
}

TEST_CASE("fetch with a smaller limit is a prefix of the larger fetch") {
    TempFile f(seven_passages());
    const auto run = load_corpus(f.path);
    for (std::size_t k = 1; k < 7; ++k) {
        const auto small = fetch(run, "q1", k);
        const auto big = fetch(run, "q1", k + 1);
        REQUIRE(small.size() <= big.size());
        for (std::size_t i = 0; i < small.size(); ++i)
            CHECK(small[i].id == big[i].id);
    }
}

TEST_CASE("a run survives a serialize/load round trip") {
    std::mt19937 rng(616);
    std::uniform_int_distribution<int> nq(1, 5);
    std::uniform_int_distribution<int> np(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        std::string content;
        const int questions = nq(rng);
        for (int q = 1; q <= questions; ++q) {
            const int passages = np(rng);
            for (int r = 1; r <= passages; ++r)
                content += line("q" + std::to_string(q), r,
                                "q" + std::to_string(q) + "-p" + std::to_string(r),
                                "text " + std::to_string(q * 100 + r));
        }
        TempFile f(content);
        const auto run = load_corpus(f.path);

        std::ostringstream re;
        for (const auto& [qid, passages] : run.by_question)
            for (const auto& p : passages) re << line(qid, p.source_rank, p.id, p.text);
        TempFile f2(re.str());
        const auto run2 = load_corpus(f2.path);

        REQUIRE(run2.question_count() == run.question_count());
        for (const auto& [qid, passages] : run.by_question) {
            REQUIRE(run2.has_question(qid));
            const auto& other = run2.by_question.at(qid);
            REQUIRE(other.size() == passages.size());
            for (std::size_t i = 0; i < passages.size(); ++i) {
                CHECK(other[i].id == passages[i].id);
                CHECK(other[i].source_rank == passages[i].source_rank);
                CHECK(other[i].text == passages[i].text);
            }
        }
    }
}
