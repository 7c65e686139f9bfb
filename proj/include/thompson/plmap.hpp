#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thompson/diagram.hpp"

namespace thompson {

// Exact piecewise-linear homeomorphism of [0,1], kept in normalized form
// (no collinear interior breakpoints).
struct PLMap {
    int N = 2;
    std::vector<std::pair<Rational, Rational>> points;

    friend bool operator==(const PLMap &, const PLMap &) = default;
};

class InvalidMap : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

PLMap identity_map(int N);
PLMap normalize(PLMap f);
// Throws InvalidMap unless breakpoints are N-adic, the map is increasing and
// fixes 0 and 1, and every slope is a power of N.
void validate(const PLMap &f);

PLMap diagram_to_map(const Diagram &d);
Rational map_at(const PLMap &f, const Rational &x);
PLMap compose(const PLMap &f, const PLMap &g); // f after g
PLMap invert(const PLMap &f);
bool map_equals(const PLMap &f, const PLMap &g);

std::string map_string(const PLMap &f);

} // namespace thompson
