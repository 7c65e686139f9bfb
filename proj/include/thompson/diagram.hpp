#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thompson {

using Rational = boost::multiprecision::cpp_rational;

// Tree stored in preorder: 1 for a caret, 0 for a leaf.  A caret is followed
// by its p+1 child subtrees.
struct Tree {
    std::vector<std::uint8_t> code{0};

    static Tree leaf() { return Tree{}; }
    bool is_leaf() const { return code.size() == 1; }
    std::size_t caret_count() const;
    std::size_t leaf_count() const { return code.size() - caret_count(); }

    friend bool operator==(const Tree &, const Tree &) = default;
    friend auto operator<=>(const Tree &, const Tree &) = default;
};

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Tree make_caret(const std::vector<Tree> &children);
// Caret whose child at `position` is `child`, all other children leaves.
Tree caret_with(int p, int position, const Tree &child);
Tree single_caret(int p);

Tree parse_tree(std::string_view text, int p);
std::string tree_string(const Tree &t, int p);

// End (exclusive) of the subtree that starts at code[pos].
std::size_t subtree_end(const Tree &t, std::size_t pos, int p);

// Tree b fits inside tree a as a rooted subtree (no carets missing).
bool contains(const Tree &a, const Tree &b, int p);
Tree tree_union(const Tree &a, const Tree &b, int p);

std::vector<std::size_t> leaf_indices(const Tree &t);

struct LeafInterval {
    Rational lo, hi;
};
std::vector<LeafInterval> leaf_intervals(const Tree &t, int p);

struct Diagram {
    int p = 1;
    Tree neg, pos;

    friend bool operator==(const Diagram &, const Diagram &) = default;
};

Diagram identity(int p);
Diagram make_generator(int p, int i);
Diagram make_infinite_generator(int p, long n);

Diagram multiply_unreduced(const Diagram &x, const Diagram &y);
Diagram multiply(const Diagram &x, const Diagram &y);
Diagram inverse(const Diagram &x);

// Leftmost leaf indices of carets exposed in both trees at the same place.
std::vector<std::size_t> removable_pairs(const Diagram &d);
Diagram remove_pair(const Diagram &d, std::size_t leaf_index);
Diagram reduce(const Diagram &d);
bool is_minimal(const Diagram &d);

struct Letter {
    long index = 0;
    int exponent = 1;

    friend bool operator==(const Letter &, const Letter &) = default;
};
using Word = std::vector<Letter>;

Word parse_word(std::string_view text);
std::string word_string(const Word &w);
std::string letter_string(const Letter &l);
Word invert_word(const Word &w);

// Generator (or inverse) diagram for a letter.
Diagram letter_diagram(int p, const Letter &l);
Diagram evaluate_word(int p, const Word &w);

// The 2(p+1) finite letters: x_0, x_0^-1, x_1, x_1^-1, ...
std::vector<Letter> finite_letters(int p);

std::string canonical_key(const Diagram &d);
// Serialization without reducing first.
std::string diagram_string(const Diagram &d);
Diagram parse_diagram(std::string_view text);
// A diagram string ("p=..") or a word in the given p.
Diagram parse_element(std::string_view text, int p);

} // namespace thompson
