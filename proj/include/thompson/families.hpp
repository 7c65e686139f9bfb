#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thompson/caret.hpp"
#include "thompson/diagram.hpp"

namespace thompson {

struct SeesawParams {
    int p = 1;
    int m = 2;
    int n = 1;
    int k = 1;
};

Word seesaw_letters(const SeesawParams &sp);
Diagram seesaw_word(const SeesawParams &sp);

struct SeesawReport {
    bool pass = false;         // exclusion: g for l > 0, g^-1 for l < 0
    bool pass_literal = false; // exclusion: g only
    int length = 0;
    std::vector<std::pair<int, int>> profile; // (l, |w g^l|), l = ±1..±k
    std::vector<std::string> failures;
    std::vector<std::string> literal_failures;
};
SeesawReport verify_seesaw(const Diagram &w, const Letter &g, int k);

bool is_dead_end(const Diagram &w);

struct LabeledCaret {
    std::string label; // A, B, C1.., D, E, F
    std::vector<int> address;
    int number = -1;
    CaretType neg, pos;
};

struct DeadEndReport {
    bool is_dead_end = false;
    std::vector<LabeledCaret> carets;
    std::vector<std::string> violations;
};
DeadEndReport structural_dead_end_check(const Diagram &w);
std::string report_json(const DeadEndReport &r);

struct DepthTwoReport {
    bool two_step_stays = false;  // every length-2 extension has length <= |w|
    bool witnesses_exceed = false; // every w x_0^-1 x_i x_j exceeds |w|
    bool depth_two = false;
};
DepthTwoReport verify_depth_two(const Diagram &w);

} // namespace thompson
