#include <doctest.h>

#include <set>

#include "support.hpp"
#include "thompson/caret.hpp"

using namespace thompson;
using testing_support::random_tree;

TEST_CASE("single caret") {
    auto t = classify(single_caret(3), 3);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == CaretType{Kind::L0});
    CHECK(number_carets(single_caret(3), 3) == std::vector<int>{0});
}

TEST_CASE("base types from the child table") {
    // p = 2, root with carets on all three children
    Tree t = make_caret({single_caret(2), single_caret(2), single_caret(2)});
    auto b = base_types(t, 2);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == BaseType{Base::L});
    CHECK(b[1] == BaseType{Base::L});
    CHECK(b[2] == BaseType{Base::M, 1});
    CHECK(b[3] == BaseType{Base::R});

    // caret hanging from the first position of a right caret
    Tree r = caret_with(2, 2, caret_with(2, 0, single_caret(2)));
    CHECK(base_types(r, 2).back() == BaseType{Base::M, 2});

    // below a non-root left caret the last child is middle, not right
    Tree l = caret_with(1, 0, caret_with(1, 1, single_caret(1)));
    CHECK(base_types(l, 1).back() == BaseType{Base::M, 1});

    // children of M(i): M(i)..M(p), then M(1)..M(i)
    Tree m = caret_with(3, 1, make_caret(std::vector<Tree>(4, single_caret(3))));
    auto mb = base_types(m, 3);
    REQUIRE(mb.size() == 6);
    CHECK(mb[1] == BaseType{Base::M, 1});
    CHECK(mb[2] == BaseType{Base::M, 1});
    CHECK(mb[3] == BaseType{Base::M, 2});
    CHECK(mb[4] == BaseType{Base::M, 3});
    CHECK(mb[5] == BaseType{Base::M, 1});
}

TEST_CASE("numbering") {
    // left vine of three carets, numbered bottom-up
    Tree vine = caret_with(1, 0, caret_with(1, 0, single_caret(1)));
    CHECK(number_carets(vine, 1) == std::vector<int>{2, 1, 0});
    // right vine: root first
    Tree rv = caret_with(1, 1, caret_with(1, 1, single_caret(1)));
    CHECK(number_carets(rv, 1) == std::vector<int>{0, 1, 2});
    auto types = classify(rv, 1);
    CHECK(types[0] == CaretType{Kind::L0});
    CHECK(types[1] == CaretType{Kind::R0});
    CHECK(types[2] == CaretType{Kind::R0});

    // M(2) caret at p = 2 emits its first child before itself
    Tree m = caret_with(2, 2, caret_with(2, 0, caret_with(2, 0, single_caret(2))));
    auto lay = caret_layout(m, 2);
    REQUIRE(lay.size() == 4);
    CHECK(lay[2].base == BaseType{Base::M, 2});
    CHECK(lay[3].base == BaseType{Base::M, 2});
    CHECK(lay[3].number < lay[2].number);
}

TEST_CASE("refined types") {
    // right caret whose immediate successor is an M(1) child
    Tree t = caret_with(2, 2, caret_with(2, 1, single_caret(2)));
    auto types = classify(t, 2);
    REQUIRE(types.size() == 3);
    CHECK(types[1] == CaretType{Kind::Rj, 0, 1});
    CHECK(types[2] == CaretType{Kind::M0, 1});

    // right caret whose immediate successor is right, then a middle caret
    Tree u = caret_with(1, 1, caret_with(1, 1, caret_with(1, 1, caret_with(1, 0, single_caret(1)))));
    auto tu = classify(u, 1);
    CHECK(type_string(tu[1]) == "R_R");
    CHECK(type_string(tu[2]) == "R(1)");

    CHECK(type_string({Kind::Mij, 2, 1}) == "M(2,1)");
    CHECK(classification_dump({{Kind::L0}, {Kind::R0}}) == "0:L_0\n1:R_0\n");
}

TEST_CASE("random trees") {
    std::set<std::pair<bool, bool>> relations;
    for (int p = 1; p <= 4; ++p) {
        std::mt19937 rng(100 + p);
        for (int t = 0; t < 200; ++t) {
            Tree tr = random_tree(p, 1 + t % 14, rng);
            auto lay = caret_layout(tr, p);
            auto types = classify(lay, p);
            std::set<int> nums;
            for (const auto &n : lay)
                nums.insert(n.number);
            CHECK(nums.size() == lay.size());
            CHECK(*nums.rbegin() == static_cast<int>(lay.size()) - 1);

            int l0 = 0;
            for (std::size_t i = 0; i < types.size(); ++i) {
                if (types[i].kind == Kind::L0) {
                    ++l0;
                    CHECK(i == 0);
                }
                if (types[i].kind == Kind::Mij)
                    CHECK(types[i].j <= types[i].i);
            }
            CHECK(l0 == 1);

            // ancestor/descendant vs predecessor/successor
            for (std::size_t a = 0; a < lay.size(); ++a)
                for (std::size_t b = 0; b < lay.size(); ++b) {
                    if (a == b)
                        continue;
                    bool anc = false;
                    for (int x = lay[b].parent; x >= 0; x = lay[x].parent)
                        anc = anc || x == static_cast<int>(a);
                    relations.insert({anc, lay[a].number < lay[b].number});
                }
        }
    }
    CHECK(relations.size() == 4);
}
