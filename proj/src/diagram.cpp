#include "thompson/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace thompson {

std::size_t Tree::caret_count() const {
    return static_cast<std::size_t>(std::count(code.begin(), code.end(), 1));
}

Tree make_caret(const std::vector<Tree> &children) {
    Tree t;
    t.code.assign(1, 1);
    for (const auto &c : children)
        t.code.insert(t.code.end(), c.code.begin(), c.code.end());
    return t;
}

Tree caret_with(int p, int position, const Tree &child) {
    std::vector<Tree> kids(p + 1);
    kids.at(position) = child;
    return make_caret(kids);
}

Tree single_caret(int p) { return make_caret(std::vector<Tree>(p + 1)); }

namespace {

struct TreeParser {
    std::string_view s;
    int p;
    std::size_t i = 0;
    std::vector<std::uint8_t> out;

    void node() {
        if (i >= s.size())
            throw ParseError("unexpected end of tree");
        if (s[i] == '.') {
            out.push_back(0);
            ++i;
            return;
        }
        if (s[i] != '(')
            throw ParseError(std::string("unexpected character '") + s[i] + "' in tree");
        ++i;
        out.push_back(1);
        for (int j = 0; j <= p; ++j)
            node();
        if (i >= s.size() || s[i] != ')')
            throw ParseError("caret does not have p+1 children");
        ++i;
    }
};

} // namespace

Tree parse_tree(std::string_view text, int p) {
    TreeParser tp{text, p, 0, {}};
    tp.node();
    if (tp.i != text.size())
        throw ParseError("trailing characters after tree");
    Tree t;
    t.code = std::move(tp.out);
    return t;
}

std::string tree_string(const Tree &t, int p) {
    std::string s;
    s.reserve(t.code.size() + t.caret_count());
    // stack of remaining children per open caret
    std::vector<int> open;
    for (auto c : t.code) {
        if (c) {
            s += '(';
            open.push_back(p + 1);
            continue;
        }
        s += '.';
        while (!open.empty() && --open.back() == 0) {
            s += ')';
            open.pop_back();
        }
    }
    return s;
}

std::size_t subtree_end(const Tree &t, std::size_t pos, int p) {
    long need = 1;
    while (need > 0) {
        need += t.code[pos] ? p : -1;
        ++pos;
    }
    return pos;
}

namespace {

void copy_range(std::vector<std::uint8_t> &out, const Tree &t, std::size_t a, std::size_t b) {
    out.insert(out.end(), t.code.begin() + a, t.code.begin() + b);
}

// Walk two trees in lockstep.
void union_rec(const Tree &a, std::size_t &ia, const Tree &b, std::size_t &ib, int p,
               std::vector<std::uint8_t> &out) {
    if (!a.code[ia]) {
        std::size_t e = subtree_end(b, ib, p);
        copy_range(out, b, ib, e);
        ib = e;
        ++ia;
        return;
    }
    if (!b.code[ib]) {
        std::size_t e = subtree_end(a, ia, p);
        copy_range(out, a, ia, e);
        ia = e;
        ++ib;
        return;
    }
    out.push_back(1);
    ++ia;
    ++ib;
    for (int j = 0; j <= p; ++j)
        union_rec(a, ia, b, ib, p, out);
}

bool contains_rec(const Tree &a, std::size_t &ia, const Tree &b, std::size_t &ib, int p) {
    if (!b.code[ib]) {
        ++ib;
        ia = subtree_end(a, ia, p);
        return true;
    }
    if (!a.code[ia])
        return false;
    ++ia;
    ++ib;
    for (int j = 0; j <= p; ++j)
        if (!contains_rec(a, ia, b, ib, p))
            return false;
    return true;
}

// For each leaf of `shape` (which must be contained in `target`), the range of
// target's code hanging below that leaf.
void leaf_ranges(const Tree &shape, std::size_t &is, const Tree &target, std::size_t &it, int p,
                 std::vector<std::pair<std::size_t, std::size_t>> &out) {
    if (!shape.code[is]) {
        std::size_t e = subtree_end(target, it, p);
        out.emplace_back(it, e);
        it = e;
        ++is;
        return;
    }
    ++is;
    ++it;
    for (int j = 0; j <= p; ++j)
        leaf_ranges(shape, is, target, it, p, out);
}

// Graft onto the leaves of `other` the subtrees that `target` hangs below the
// matching leaves of `along`.
Tree refine(const Tree &along, const Tree &other, const Tree &target, int p) {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::size_t ia = 0, it = 0;
    leaf_ranges(along, ia, target, it, p, ranges);
    Tree r;
    r.code.clear();
    r.code.reserve(other.code.size() + target.code.size());
    std::size_t k = 0;
    for (auto c : other.code) {
        if (c)
            r.code.push_back(1);
        else {
            copy_range(r.code, target, ranges[k].first, ranges[k].second);
            ++k;
        }
    }
    return r;
}

// (position in code, leftmost leaf index) of every exposed caret
std::vector<std::pair<std::size_t, std::size_t>> exposed(const Tree &t, int p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t leaves = 0;
    const auto &c = t.code;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) {
            ++leaves;
            continue;
        }
        if (i + p + 1 >= c.size())
            continue;
        bool all = true;
        for (int j = 1; j <= p + 1 && all; ++j)
            all = !c[i + j];
        if (all)
            out.emplace_back(i, leaves);
    }
    return out;
}

void collapse(Tree &t, std::size_t pos, int p) {
    t.code.erase(t.code.begin() + pos, t.code.begin() + pos + p + 1);
    t.code[pos] = 0;
}

} // namespace

Tree tree_union(const Tree &a, const Tree &b, int p) {
    Tree r;
    r.code.clear();
    std::size_t ia = 0, ib = 0;
    union_rec(a, ia, b, ib, p, r.code);
    return r;
}

bool contains(const Tree &a, const Tree &b, int p) {
    std::size_t ia = 0, ib = 0;
    return contains_rec(a, ia, b, ib, p);
}

std::vector<std::size_t> leaf_indices(const Tree &t) {
    std::vector<std::size_t> v(t.leaf_count());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = i;
    return v;
}

std::vector<LeafInterval> leaf_intervals(const Tree &t, int p) {
    std::vector<LeafInterval> out;
    struct Frame {
        Rational lo, width;
        int next;
    };
    std::vector<Frame> stack;
    Rational lo = 0, width = 1;
    for (auto c : t.code) {
        // interval of the current node
        if (!stack.empty()) {
            auto &f = stack.back();
            width = f.width / (p + 1);
            lo = f.lo + width * f.next;
        }
        if (c) {
            stack.push_back({lo, width, 0});
            continue;
        }
        out.push_back({lo, lo + width});
        while (!stack.empty() && ++stack.back().next == p + 1)
            stack.pop_back();
    }
    return out;
}

Diagram identity(int p) { return Diagram{p, Tree::leaf(), Tree::leaf()}; }

Diagram make_generator(int p, int i) {
    if (p < 1)
        throw std::invalid_argument("p must be at least 1");
    if (i < 0 || i > p)
        throw std::out_of_range("generator index out of range");
    Tree c = single_caret(p);
    if (i == 0)
        return Diagram{p, caret_with(p, p, c), caret_with(p, 0, c)};
    if (i < p)
        return Diagram{p, caret_with(p, p, c), caret_with(p, i, c)};
    return Diagram{p, caret_with(p, p, caret_with(p, p, c)), caret_with(p, p, caret_with(p, 0, c))};
}

Diagram make_infinite_generator(int p, long n) {
    if (n < 0)
        throw std::out_of_range("generator index must be non-negative");
    if (n <= p)
        return make_generator(p, static_cast<int>(n));
    // x_n = x_0^-1 x_{n-p} x_0
    Diagram x0 = make_generator(p, 0);
    Diagram cur = make_generator(p, static_cast<int>((n - 1) % p + 1));
    for (long m = (n - 1) % p + 1 + p; m <= n; m += p)
        cur = multiply(multiply(inverse(x0), cur), x0);
    return cur;
}

Diagram multiply_unreduced(const Diagram &x, const Diagram &y) {
    if (x.p != y.p)
        throw std::invalid_argument("arity mismatch");
    const int p = x.p;
    // make y's positive tree identical to x's negative tree
    Tree u = tree_union(x.neg, y.pos, p);
    Diagram r{p, {}, {}};
    r.neg = refine(y.pos, y.neg, u, p);
    r.pos = refine(x.neg, x.pos, u, p);
    return r;
}

Diagram multiply(const Diagram &x, const Diagram &y) { return reduce(multiply_unreduced(x, y)); }

Diagram inverse(const Diagram &x) { return Diagram{x.p, x.pos, x.neg}; }

std::vector<std::size_t> removable_pairs(const Diagram &d) {
    auto a = exposed(d.neg, d.p);
    auto b = exposed(d.pos, d.p);
    std::vector<std::size_t> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].second == b[j].second) {
            out.push_back(a[i].second);
            ++i;
            ++j;
        } else if (a[i].second < b[j].second)
            ++i;
        else
            ++j;
    }
    return out;
}

Diagram remove_pair(const Diagram &d, std::size_t leaf_index) {
    Diagram r = d;
    bool done = false;
    for (auto *t : {&r.neg, &r.pos}) {
        done = false;
        for (auto [pos, leaf] : exposed(*t, d.p))
            if (leaf == leaf_index) {
                collapse(*t, pos, d.p);
                done = true;
                break;
            }
        if (!done)
            throw std::invalid_argument("no exposed caret pair at that leaf index");
    }
    return r;
}

Diagram reduce(const Diagram &d) {
    Diagram r = d;
    for (;;) {
        auto common = removable_pairs(r);
        if (common.empty())
            return r;
        r = remove_pair(r, common.front());
    }
}

bool is_minimal(const Diagram &d) { return removable_pairs(d).empty(); }

Word parse_word(std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        std::string_view tok = text.substr(i, j - i);
        i = j;
        Letter l;
        std::string_view num = tok;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            l.exponent = -1;
            num = tok.substr(0, tok.size() - 3);
        }
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), l.index);
        if (ec != std::errc() || ptr != num.data() + num.size() || num.empty() || l.index < 0)
            throw ParseError("bad word token '" + std::string(tok) + "'");
        w.push_back(l);
    }
    return w;
}

std::string letter_string(const Letter &l) {
    return std::to_string(l.index) + (l.exponent < 0 ? "^-1" : "");
}

std::string word_string(const Word &w) {
    std::string s;
    for (const auto &l : w) {
        if (!s.empty())
            s += ' ';
        s += letter_string(l);
    }
    return s;
}

Word invert_word(const Word &w) {
    Word r(w.rbegin(), w.rend());
    for (auto &l : r)
        l.exponent = -l.exponent;
    return r;
}

Diagram letter_diagram(int p, const Letter &l) {
    Diagram g = make_infinite_generator(p, l.index);
    return l.exponent > 0 ? g : inverse(g);
}

Diagram evaluate_word(int p, const Word &w) {
    Diagram r = identity(p);
    for (const auto &l : w)
        r = multiply(r, letter_diagram(p, l));
    return r;
}

std::vector<Letter> finite_letters(int p) {
    std::vector<Letter> v;
    for (int i = 0; i <= p; ++i) {
        v.push_back({i, 1});
        v.push_back({i, -1});
    }
    return v;
}

std::string diagram_string(const Diagram &d) {
    return "p=" + std::to_string(d.p) + ";neg=" + tree_string(d.neg, d.p) +
           ";pos=" + tree_string(d.pos, d.p);
}

std::string canonical_key(const Diagram &d) { return diagram_string(reduce(d)); }

Diagram parse_diagram(std::string_view text) {
    auto fail = [] { throw ParseError("diagram must look like p=<int>;neg=<tree>;pos=<tree>"); };
    if (text.substr(0, 2) != "p=")
        fail();
    auto s1 = text.find(';');
    if (s1 == std::string_view::npos)
        fail();
    int p = 0;
    auto ps = text.substr(2, s1 - 2);
    auto [ptr, ec] = std::from_chars(ps.data(), ps.data() + ps.size(), p);
    if (ec != std::errc() || ptr != ps.data() + ps.size() || p < 1)
        fail();
    auto rest = text.substr(s1 + 1);
    if (rest.substr(0, 4) != "neg=")
        fail();
    auto s2 = rest.find(';');
    if (s2 == std::string_view::npos)
        fail();
    auto negs = rest.substr(4, s2 - 4);
    auto poss = rest.substr(s2 + 1);
    if (poss.substr(0, 4) != "pos=")
        fail();
    Diagram d{p, parse_tree(negs, p), parse_tree(poss.substr(4), p)};
    if (d.neg.leaf_count() != d.pos.leaf_count())
        throw ParseError("trees have different leaf counts");
    return d;
}

Diagram parse_element(std::string_view text, int p) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (text.substr(i, 2) == "p=") {
        Diagram d = parse_diagram(text.substr(i));
        if (d.p != p)
            throw ParseError("diagram arity does not match -p");
        return d;
    }
    return evaluate_word(p, parse_word(text));
}

} // namespace thompson
