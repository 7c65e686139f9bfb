#pragma once

#include <functional>
#include <random>

#include "thompson/diagram.hpp"

namespace testing_support {

using namespace thompson;

// Grow a tree by turning random leaves into carets.
inline Tree random_tree(int p, int carets, std::mt19937 &rng) {
    Tree t;
    while (static_cast<int>(t.caret_count()) < carets) {
        std::vector<std::size_t> leaves;
        for (std::size_t i = 0; i < t.code.size(); ++i)
            if (!t.code[i])
                leaves.push_back(i);
        std::size_t at = leaves[rng() % leaves.size()];
        t.code[at] = 1;
        t.code.insert(t.code.begin() + at + 1, p + 1, 0);
    }
    return t;
}

inline Word random_word(int p, int max_len, std::mt19937 &rng) {
    Word w(rng() % (max_len + 1));
    for (auto &l : w)
        l = {static_cast<long>(rng() % (p + 1)), rng() % 2 ? 1 : -1};
    return w;
}

// Add a caret under the same leaf index in both trees.
inline Diagram expand_leaf(const Diagram &d, std::size_t leaf) {
    Diagram r = d;
    for (auto *t : {&r.neg, &r.pos}) {
        std::size_t seen = 0;
        for (std::size_t i = 0; i < t->code.size(); ++i)
            if (!t->code[i] && seen++ == leaf) {
                t->code[i] = 1;
                t->code.insert(t->code.begin() + i + 1, d.p + 1, 0);
                break;
            }
    }
    return r;
}

inline Diagram unreduce(const Diagram &d, int extra, std::mt19937 &rng) {
    Diagram r = d;
    for (int e = 0; e < extra; ++e)
        r = expand_leaf(r, rng() % r.neg.leaf_count());
    return r;
}

// All trees with exactly k carets.
inline std::vector<Tree> all_trees(int p, int k) {
    if (k == 0)
        return {Tree{}};
    std::vector<Tree> out;
    // distribute k-1 carets over p+1 children
    std::vector<int> split(p + 1, 0);
    std::function<void(int, int)> parts = [&](int child, int left) {
        if (child == p) {
            split[p] = left;
            std::vector<std::vector<Tree>> options;
            for (int c = 0; c <= p; ++c)
                options.push_back(all_trees(p, split[c]));
            std::vector<std::size_t> idx(p + 1, 0);
            for (;;) {
                std::vector<Tree> kids;
                for (int c = 0; c <= p; ++c)
                    kids.push_back(options[c][idx[c]]);
                out.push_back(make_caret(kids));
                int c = p;
                while (c >= 0 && ++idx[c] == options[c].size())
                    idx[c--] = 0;
                if (c < 0)
                    break;
            }
            return;
        }
        for (int a = 0; a <= left; ++a) {
            split[child] = a;
            parts(child + 1, left - a);
        }
    };
    parts(0, k - 1);
    return out;
}

} // namespace testing_support
