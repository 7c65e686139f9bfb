#pragma once

#include <string>
#include <vector>

#include "thompson/diagram.hpp"

namespace thompson {

enum class Base { L, R, M };

struct BaseType {
    Base kind = Base::L;
    int index = 0; // M subtype, 1..p

    friend bool operator==(const BaseType &, const BaseType &) = default;
};

enum class Kind { L0, LL, R0, RR, Rj, M0, Mij };

// Refined caret type.  Rj uses j; M0 uses i; Mij uses i and j.
struct CaretType {
    Kind kind = Kind::L0;
    int i = 0;
    int j = 0;

    friend bool operator==(const CaretType &, const CaretType &) = default;
};

std::string type_string(const CaretType &t);
std::string base_string(const BaseType &b);
// Every refined type that can occur for the given p.
std::vector<CaretType> all_caret_types(int p);

class ClassificationError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// One caret of a tree, in preorder position.
struct CaretNode {
    std::vector<int> address; // child positions from the root, 0-based
    int parent = -1;
    std::vector<int> children; // p+1 entries, -1 for a leaf
    BaseType base;
    int number = 0;
};

// Carets in preorder with base types and numbering filled in.
std::vector<CaretNode> caret_layout(const Tree &t, int p);
// Preorder index of the caret at `address`, or -1.
int caret_at(const std::vector<CaretNode> &layout, const std::vector<int> &address);

std::vector<BaseType> base_types(const Tree &t, int p);   // preorder
std::vector<int> number_carets(const Tree &t, int p);      // preorder -> number
std::vector<CaretType> classify(const Tree &t, int p);     // by caret number
std::vector<CaretType> classify(const std::vector<CaretNode> &layout, int p);

std::string classification_dump(const std::vector<CaretType> &types);

} // namespace thompson
