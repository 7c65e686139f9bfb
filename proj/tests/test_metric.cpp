#include <doctest.h>

#include "support.hpp"
#include "thompson/cayley.hpp"
#include "thompson/metric.hpp"

using namespace thompson;
using testing_support::random_word;

TEST_CASE("weight table entries") {
    CHECK(weight({Kind::L0}, {Kind::L0}) == 0);
    CHECK(weight({Kind::R0}, {Kind::Mij, 2, 1}) == 3);
    CHECK(weight({Kind::M0, 2}, {Kind::Mij, 3, 1}) == 4);
    CHECK(weight({Kind::M0, 1}, {Kind::Mij, 3, 2}) == 2);
    CHECK(weight({Kind::Rj, 0, 1}, {Kind::M0, 2}) == 3);
    CHECK(weight({Kind::Rj, 0, 3}, {Kind::M0, 2}) == 1);
    CHECK(weight({Kind::LL}, {Kind::R0}) == 1);
    CHECK(weight({Kind::R0}, {Kind::R0}) == 0);
    CHECK(weight({Kind::Mij, 2, 2}, {Kind::Mij, 3, 1}) == 4);
    CHECK_THROWS_AS(weight({Kind::L0}, {Kind::LL}), WeightError);
    CHECK_THROWS_AS(weight({Kind::R0}, {Kind::L0}), WeightError);
}

TEST_CASE("weight table is symmetric and total") {
    for (int p = 1; p <= 4; ++p) {
        WeightTable t = weight_table(p);
        const std::size_t n = t.types.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                CHECK(t.w[a][b] == t.w[b][a]);
                bool l0 = t.types[a].kind == Kind::L0 || t.types[b].kind == Kind::L0;
                if (l0 && t.types[a].kind != t.types[b].kind)
                    CHECK(t.w[a][b] == -1);
                else
                    CHECK(t.w[a][b] >= 0);
            }
    }
}

TEST_CASE("lengths of small elements") {
    CHECK(word_length(identity(1)).total == 0);
    LengthReport r = word_length(make_generator(1, 0));
    CHECK(r.total == 1);
    REQUIRE(r.per_caret.size() == 2);
    CHECK(r.per_caret[0].neg == CaretType{Kind::L0});
    CHECK(r.per_caret[1].neg == CaretType{Kind::R0});
    CHECK(r.per_caret[1].pos == CaretType{Kind::LL});
    CHECK(word_length(inverse(make_generator(1, 0))).total == 1);
    CHECK(word_length(evaluate_word(1, parse_word("0 0 0"))).total == 3);
    CHECK(word_length(evaluate_word(2, parse_word("0 0"))).total == 2);
}

TEST_CASE("metric axioms on samples") {
    for (int p = 1; p <= 3; ++p) {
        std::mt19937 rng(20 + p);
        for (int t = 0; t < 100; ++t) {
            Word wu = random_word(p, 10, rng), wv = random_word(p, 10, rng);
            Diagram u = evaluate_word(p, wu), v = evaluate_word(p, wv);
            int lu = word_length(u).total, lv = word_length(v).total;
            CHECK(lu == word_length(inverse(u)).total);
            CHECK(lu <= static_cast<int>(wu.size()));
            CHECK(word_length(multiply(u, v)).total <= lu + lv);
        }
    }
}

TEST_CASE("formula agrees with BFS on a small ball") {
    auto ball = bfs_ball(1, 6);
    CHECK(verify_metric(ball).empty());
    auto ball2 = bfs_ball(2, 4);
    CHECK(verify_metric(ball2).empty());
}

TEST_CASE("a corrupted weight table is caught") {
    auto ball = bfs_ball(1, 6);
    auto broken = [](const Diagram &d) {
        auto neg = classify(d.neg, d.p), pos = classify(d.pos, d.p);
        int total = 0;
        for (std::size_t i = 0; i < neg.size(); ++i) {
            int w = weight(neg[i], pos[i]);
            if (neg[i].kind == Kind::R0 && pos[i].kind == Kind::M0)
                w = 3;
            total += w;
        }
        return total;
    };
    CHECK_FALSE(verify_metric_with(ball, broken).empty());
}

TEST_CASE("subtree and minimality conditions") {
    const Letter x0{0, 1}, x0i{0, -1};
    CHECK_FALSE(subtree_condition(identity(1), x0));
    Diagram x0sq = evaluate_word(1, parse_word("0 0"));
    CHECK(subtree_condition(x0sq, x0i));
    CHECK_FALSE(minimality_condition(make_generator(1, 0), x0i));
    CHECK(minimality_condition(identity(1), x0));
    CHECK_THROWS(subtree_condition(identity(1), Letter{2, 1}));

    CHECK(predicted_length_relation(identity(2), {1, 1}) == LengthRelation::Increases);
    CHECK(predicted_length_relation(make_generator(1, 0), x0i) == LengthRelation::DecreasesByOne);
    CHECK(relation_string(LengthRelation::SingleCaretChange) == "SINGLE_CARET_CHANGE");
}

TEST_CASE("predictions match actual length changes") {
    for (int p = 1; p <= 3; ++p) {
        std::mt19937 rng(40 + p);
        for (int t = 0; t < 80; ++t) {
            Diagram w = evaluate_word(p, random_word(p, 12, rng));
            const int lw = word_length(w).total;
            for (const auto &g : finite_letters(p)) {
                const int lg = word_length(multiply(w, letter_diagram(p, g))).total;
                switch (predicted_length_relation(w, g)) {
                case LengthRelation::Increases:
                    CHECK(lg > lw);
                    break;
                case LengthRelation::DecreasesByOne:
                    CHECK(lg == lw - 1);
                    break;
                case LengthRelation::SingleCaretChange: {
                    auto diff = caret_type_diff(w, g);
                    REQUIRE(diff.size() == 1);
                    CHECK(diff[0].delta == lg - lw);
                    CHECK(diff[0].old_pos == diff[0].new_pos);
                    break;
                }
                }
            }
        }
    }
}

TEST_CASE("caret diff at a dead end") {
    Diagram w = parse_diagram("p=1;neg=((.(..))((..)(.(.(..)))));pos=((((..).).)(.(.((..).))))");
    auto diff = caret_type_diff(w, {0, 1});
    REQUIRE(diff.size() == 1);
    // the root caret
    CHECK(diff[0].old_neg == CaretType{Kind::LL});
    CHECK(diff[0].old_pos == CaretType{Kind::LL});
    CHECK(diff[0].new_neg == CaretType{Kind::Rj, 0, 1});
    CHECK(diff[0].delta == -1);
    // had the root's positive partner been R_0, the same change would add one
    CHECK(weight(diff[0].new_neg, {Kind::R0}) - weight(diff[0].old_neg, {Kind::R0}) == 1);
    CHECK_THROWS(caret_type_diff(identity(1), {0, 1}));
}
