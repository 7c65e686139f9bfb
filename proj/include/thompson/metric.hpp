#pragma once

#include <string>
#include <vector>

#include "thompson/caret.hpp"
#include "thompson/diagram.hpp"

namespace thompson {

class WeightError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

int weight(const CaretType &a, const CaretType &b);

// Full weight matrix over all_caret_types(p); entries pairing L_0 with
// anything else are -1.
struct WeightTable {
    int p;
    std::vector<CaretType> types;
    std::vector<std::vector<int>> w;
};
WeightTable weight_table(int p);

struct CaretWeight {
    int index;
    CaretType neg, pos;
    int weight;
};

struct LengthReport {
    int total = 0;
    std::vector<CaretWeight> per_caret;
};

LengthReport word_length(const Diagram &x);
// Skips reduction; x must already be minimal.
int length_of_minimal(const Diagram &x);
std::string report_string(const LengthReport &r);

bool subtree_condition(const Diagram &w, const Letter &g);
bool minimality_condition(const Diagram &w, const Letter &g);

enum class LengthRelation { Increases, DecreasesByOne, SingleCaretChange };
LengthRelation predicted_length_relation(const Diagram &w, const Letter &g);
std::string relation_string(LengthRelation r);

struct CaretDiff {
    int index;
    CaretType old_neg, old_pos, new_neg, new_pos;
    int delta;
};
// Differences between the caret pairs of w and of the unreduced product wg.
// Requires the subtree condition.
std::vector<CaretDiff> caret_type_diff(const Diagram &w, const Letter &g);

} // namespace thompson
