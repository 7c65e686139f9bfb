#include <doctest.h>

#include <map>

#include "support.hpp"
#include "thompson/plmap.hpp"

using namespace thompson;
using testing_support::all_trees;
using testing_support::random_word;
using testing_support::unreduce;

TEST_CASE("maps of simple diagrams") {
    CHECK(map_string(diagram_to_map(identity(1))) == "(0,0) (1,1)");
    PLMap x0 = diagram_to_map(make_generator(1, 0));
    CHECK(map_string(x0) == "(0,0) (1/2,1/4) (3/4,1/2) (1,1)");
    validate(x0);
    // slopes 1/2, 1, 2
    CHECK(map_at(x0, Rational(1, 4)) == Rational(1, 8));
    CHECK(map_at(x0, Rational(5, 8)) == Rational(3, 8));
    CHECK(map_at(x0, Rational(7, 8)) == Rational(3, 4));
    CHECK_FALSE(map_equals(x0, diagram_to_map(make_generator(1, 1))));
}

TEST_CASE("normalization and equality") {
    PLMap f = diagram_to_map(make_generator(2, 1));
    PLMap g = f;
    // extra collinear breakpoint
    auto a = g.points[0], b = g.points[1];
    g.points.insert(g.points.begin() + 1, {(a.first + b.first) / 2, (a.second + b.second) / 2});
    CHECK(map_equals(f, g));
    CHECK(normalize(g) == f);
}

TEST_CASE("compose and invert") {
    for (int p = 1; p <= 3; ++p) {
        std::mt19937 rng(p);
        for (int t = 0; t < 40; ++t) {
            Diagram a = evaluate_word(p, random_word(p, 10, rng));
            Diagram b = evaluate_word(p, random_word(p, 10, rng));
            PLMap fa = diagram_to_map(a), fb = diagram_to_map(b);
            CHECK(map_equals(compose(fa, identity_map(p + 1)), fa));
            CHECK(map_equals(compose(fa, invert(fa)), identity_map(p + 1)));
            CHECK(map_equals(invert(invert(fa)), fa));
            CHECK(map_equals(invert(fa), diagram_to_map(inverse(a))));
            CHECK(map_equals(diagram_to_map(multiply(a, b)), compose(fa, fb)));
            CHECK(map_equals(diagram_to_map(unreduce(a, 3, rng)), fa));
            CHECK_NOTHROW(validate(compose(fa, fb)));
        }
    }
}

TEST_CASE("relator composes to the identity map") {
    // [x_0 x_1^-1, x_2] at p = 1
    const char *word = "0 1^-1 2 1 0^-1 2^-1";
    PLMap f = identity_map(2);
    for (const auto &l : parse_word(word))
        f = compose(f, diagram_to_map(letter_diagram(1, l)));
    CHECK(map_equals(f, identity_map(2)));
}

TEST_CASE("validation rejects bad maps") {
    PLMap bad{2, {{0, 0}, {Rational(1, 3), Rational(1, 3)}, {1, 1}}};
    CHECK_THROWS_AS(validate(bad), InvalidMap);
    PLMap slope3{2, {{0, 0}, {Rational(1, 4), Rational(3, 4)}, {1, 1}}};
    CHECK_THROWS_AS(validate(slope3), InvalidMap);
    PLMap dec{2, {{0, 0}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}, {1, 1}}};
    CHECK_THROWS_AS(validate(dec), InvalidMap);
    // 1/2 lies in Z[1/4]
    CHECK_NOTHROW(validate(PLMap{4, {{0, 0}, {Rational(1, 2), Rational(1, 8)}, {Rational(5, 8), Rational(5, 8)}, {1, 1}}}));
}

TEST_CASE("map equality matches key equality on small diagrams") {
    for (int p = 1; p <= 2; ++p) {
        std::map<std::string, std::string> key_to_map, map_to_key;
        for (int k = 0; k <= 3; ++k) {
            auto trees = all_trees(p, k);
            for (const auto &n : trees)
                for (const auto &q : trees) {
                    Diagram d{p, n, q};
                    std::string key = canonical_key(d);
                    std::string m = map_string(diagram_to_map(d));
                    auto [it1, new1] = key_to_map.emplace(key, m);
                    auto [it2, new2] = map_to_key.emplace(m, key);
                    CHECK(it1->second == m);
                    CHECK(it2->second == key);
                }
        }
        CHECK(key_to_map.size() == map_to_key.size());
    }
}
