#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "ewaq/pipeline.hpp"

using namespace ewaq;

namespace {

ProcessedText make_text(std::initializer_list<std::string> roots) {
    ProcessedText pt;
    for (const auto& r : roots) {
        pt.terms.insert(r);
        pt.tokens.push_back(Token{r, r, r});
    }
    return pt;
}

EntailmentScore success_score(double degree) {
    EntailmentScore s;
    s.status = Status::Success;
    s.cos_hut = degree;
    s.degree = degree;
    return s;
}

EntailmentScore failed_score(Status st = Status::Cond13Failed) {
    EntailmentScore s;
    s.status = st;
    return s;
}

Passage make_passage(std::string id, int rank, std::string text = "x") {
    return Passage{std::move(id), rank, std::move(text)};
}

std::vector<ScoredPassage> scored_seven() {
    // degrees keyed by source rank; ranks 2 and 5 fail
    return {
        {make_passage("p1", 1), success_score(0.7872)},
        {make_passage("p2", 2), failed_score()},
        {make_passage("p3", 3), success_score(0.6493)},
        {make_passage("p4", 4), success_score(0.8105)},
        {make_passage("p5", 5), failed_score()},
        {make_passage("p6", 6), success_score(0.7039)},
        {make_passage("p7", 7), success_score(0.8345)},
    };
}

} // namespace

TEST_CASE("injected degrees reproduce the documented re-ranking") {
    const auto ranked = order_by_entailment(scored_seven());
    std::vector<int> order;
    for (const auto& rp : ranked) order.push_back(rp.passage.source_rank);
    // successes by degree descending, then the failed tail by source rank
    CHECK(order == std::vector<int>{7, 4, 1, 6, 3, 2, 5});
    for (std::size_t i = 0; i < ranked.size(); ++i)
        CHECK(ranked[i].new_rank == static_cast<int>(i) + 1);
}

TEST_CASE("a singleton list ranks first whatever its status") {
    const auto ranked =
        order_by_entailment({{make_passage("only", 1), failed_score()}});
    REQUIRE(ranked.size() == 1);
    CHECK(ranked[0].new_rank == 1);
}

TEST_CASE("equal degrees keep source order") {
    const auto ranked = order_by_entailment({
        {make_passage("b", 2), success_score(0.7)},
        {make_passage("a", 1), success_score(0.7)},
    });
    CHECK(ranked[0].passage.id == "a");
    CHECK(ranked[1].passage.id == "b");
}

TEST_CASE("rerank rejects an empty question") {
    const ProcessedText empty;
    CHECK_THROWS_AS(rerank(empty, {}, Lexicon{}, Thresholds{}), std::invalid_argument);
}

TEST_CASE("rerank output is a permutation with the success partition") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> count(1, 20);
    std::uniform_real_distribution<double> deg(0.0, 1.0);
    std::uniform_int_distribution<int> fail(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<ScoredPassage> scored;
        const int total = count(rng);
        for (int i = 1; i <= total; ++i) {
            if (fail(rng) == 0)
                scored.emplace_back(make_passage("p" + std::to_string(i), i),
                                    failed_score());
            else
                scored.emplace_back(make_passage("p" + std::to_string(i), i),
                                    success_score(deg(rng)));
        }
        auto input_ids = std::vector<std::string>{};
        for (const auto& sp : scored) input_ids.push_back(sp.first.id);

        const auto ranked = order_by_entailment(scored);
        REQUIRE(ranked.size() == scored.size());

        // permutation: same multiset of ids
        auto output_ids = std::vector<std::string>{};
        for (const auto& rp : ranked) output_ids.push_back(rp.passage.id);
        auto a = input_ids, b = output_ids;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);

        // partition and ordering rules
        bool seen_failure = false;
        double last_degree = 2.0;
        int last_fail_rank = 0;
        for (const auto& rp : ranked) {
            if (rp.score.succeeded()) {
                CHECK_FALSE(seen_failure);  // no failure before a success
                CHECK(*rp.score.degree <= last_degree);
                last_degree = *rp.score.degree;
            } else {
                seen_failure = true;
                CHECK(rp.passage.source_rank > last_fail_rank);
                last_fail_rank = rp.passage.source_rank;
            }
        }
    }
}

TEST_CASE("duplicating a passage keeps the relative order of the others") {
    std::mt19937 rng(888);
    std::uniform_real_distribution<double> deg(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ScoredPassage> scored;
        for (int i = 1; i <= 8; ++i)
            scored.emplace_back(make_passage("p" + std::to_string(i), i),
                                i % 3 == 0 ? failed_score() : success_score(deg(rng)));
        const auto baseline = order_by_entailment(scored);

        std::uniform_int_distribution<std::size_t> pick(0, scored.size() - 1);
        auto dup = scored[pick(rng)];
        dup.first.id = "dup";
        dup.first.source_rank = 9;
        auto with_dup = scored;
        with_dup.push_back(dup);
        const auto ranked = order_by_entailment(with_dup);

        std::vector<std::string> filtered;
        for (const auto& rp : ranked)
            if (rp.passage.id != "dup") filtered.push_back(rp.passage.id);
        std::vector<std::string> expected;
        for (const auto& rp : baseline) expected.push_back(rp.passage.id);
        CHECK(filtered == expected);
    }
}

TEST_CASE("extract_answer on a single one-sentence passage equals direct scoring") {
    const auto q = make_text({"a", "b", "c"});
    const std::vector<Passage> passages = {make_passage("p1", 1, "a b c r")};
    const auto ranked = rerank(q, passages, Lexicon{}, Thresholds{});
    const auto answer = extract_answer(q, ranked, Lexicon{}, Thresholds{});
    REQUIRE(answer.has_value());
    CHECK(answer->sentence == "a b c r");
    const auto direct =
        entailment_score(q, preprocess("a b c r", Lexicon{}), Lexicon{}, Thresholds{});
    REQUIRE(direct.degree.has_value());
    CHECK(answer->degree == *direct.degree);
}

TEST_CASE("the higher-degree second sentence wins") {
    // S1 covers two question terms, S2 all three plus two extras;
    // both succeed and S2's degree is strictly larger.
    const auto q = make_text({"a", "b", "c"});
    const std::vector<Passage> passages = {
        make_passage("p1", 1, "a b x y z. a b c w v.")};
    const auto ranked = rerank(q, passages, Lexicon{}, Thresholds{});
    const auto answer = extract_answer(q, ranked, Lexicon{}, Thresholds{});
    REQUIRE(answer.has_value());
    CHECK(answer->sentence == "a b c w v");
    CHECK(std::abs(answer->degree - 0.8660254037844386) < 1e-12);
}

TEST_CASE("no successful sentence means no answer") {
    const auto q = make_text({"a", "b", "c"});
    const std::vector<Passage> passages = {
        make_passage("p1", 1, "q w e r t."),
        make_passage("p2", 2, "z z z z."),
    };
    const auto ranked = rerank(q, passages, Lexicon{}, Thresholds{});
    CHECK_FALSE(extract_answer(q, ranked, Lexicon{}, Thresholds{}).has_value());
}

TEST_CASE("an empty ranked list yields no answer") {
    const auto q = make_text({"a"});
    CHECK_FALSE(extract_answer(q, {}, Lexicon{}, Thresholds{}).has_value());
}

TEST_CASE("equal sentence degrees fall to the lower passage rank") {
    const auto q = make_text({"a", "b", "c"});
    // identical sentence content in both passages -> identical degrees
    const std::vector<Passage> passages = {
        make_passage("p1", 1, "a b c r"),
        make_passage("p2", 2, "a b c s"),
    };
    const auto ranked = rerank(q, passages, Lexicon{}, Thresholds{});
    const auto answer = extract_answer(q, ranked, Lexicon{}, Thresholds{});
    REQUIRE(answer.has_value());
    CHECK(answer->passage_id == ranked[0].passage.id);
    CHECK(answer->passage_new_rank == 1);
}

TEST_CASE("extract_answer only scans the top k passages") {
    const auto q = make_text({"a", "b", "c"});
    // p1 holds the best sentence but fails as a whole passage, so it ranks
    // behind p2; the cut at k=1 must therefore miss it.
    const std::vector<Passage> passages = {
        make_passage("p1", 1, "a b c r. q w e t y u."),
        make_passage("p2", 2, "a b x y z"),
    };
    const auto ranked = rerank(q, passages, Lexicon{}, Thresholds{});
    REQUIRE(ranked[0].passage.id == "p2");
    REQUIRE_FALSE(ranked[1].score.succeeded());

    const auto top1 = extract_answer(q, ranked, Lexicon{}, Thresholds{}, 1);
    REQUIRE(top1.has_value());
    CHECK(top1->sentence == "a b x y z");

    const auto top2 = extract_answer(q, ranked, Lexicon{}, Thresholds{}, 2);
    REQUIRE(top2.has_value());
    CHECK(top2->sentence == "a b c r");
}

TEST_CASE("the answer sentence is a substring with a reproducible degree") {
    std::mt19937 rng(1357);
    const std::vector<std::string> vocab = {"a", "b", "c", "d", "e",
                                            "f", "g", "h", "i", "j"};
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    std::uniform_int_distribution<int> words(1, 6);
    std::uniform_int_distribution<int> sentences(1, 3);
    const auto q = make_text({"a", "b", "c"});
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Passage> passages;
        for (int p = 1; p <= 5; ++p) {
            std::string text;
            const int ns = sentences(rng);
            for (int s = 0; s < ns; ++s) {
                const int nw = words(rng);
                for (int w = 0; w < nw; ++w) text += vocab[pick(rng)] + " ";
                text += ". ";
            }
            passages.push_back(make_passage("p" + std::to_string(p), p, text));
        }
        const auto ranked = rerank(q, passages, Lexicon{}, Thresholds{});
        const auto answer = extract_answer(q, ranked, Lexicon{}, Thresholds{});
        if (!answer) continue;
        bool found = false;
        for (std::size_t i = 0; i < std::min<std::size_t>(5, ranked.size()); ++i)
            if (ranked[i].passage.text.find(answer->sentence) != std::string::npos)
                found = true;
        CHECK(found);
        const auto recomputed = entailment_score(
            q, preprocess(answer->sentence, Lexicon{}), Lexicon{}, Thresholds{});
        REQUIRE(recomputed.degree.has_value());
        CHECK(answer->degree == *recomputed.degree);
    }
}
