#include "thompson/metric.hpp"

#include <sstream>
#include <stdexcept>

namespace thompson {

namespace {

// Rows and columns: L_L, R_0, R_R, R(j), M_0, M(i,j).  -1 marks the two
// entries that depend on subscripts.
constexpr int kCond = -1;
constexpr int kTable[6][6] = {
    {2, 1, 1, 1, 2, 2},
    {1, 0, 2, 2, 1, 3},
    {1, 2, 2, 2, 1, 3},
    {1, 2, 2, 2, kCond, 3},
    {2, 1, 1, kCond, 2, kCond},
    {2, 3, 3, 3, kCond, 4},
};

int slot(Kind k) { return static_cast<int>(k) - 1; }

} // namespace

int weight(const CaretType &a, const CaretType &b) {
    if (a.kind == Kind::L0 || b.kind == Kind::L0) {
        if (a.kind == b.kind)
            return 0;
        throw WeightError("L_0 paired with " + type_string(a.kind == Kind::L0 ? b : a));
    }
    int e = kTable[slot(a.kind)][slot(b.kind)];
    if (e != kCond)
        return e;
    const CaretType &x = slot(a.kind) < slot(b.kind) ? a : b;
    const CaretType &y = slot(a.kind) < slot(b.kind) ? b : a;
    if (x.kind == Kind::Rj) // (R(j), M_0(l))
        return x.j <= y.i ? 3 : 1;
    // (M_0(k), M(t,u))
    return y.j <= x.i ? 4 : 2;
}

WeightTable weight_table(int p) {
    WeightTable t{p, all_caret_types(p), {}};
    for (const auto &a : t.types) {
        std::vector<int> row;
        for (const auto &b : t.types) {
            try {
                row.push_back(weight(a, b));
            } catch (const WeightError &) {
                row.push_back(-1);
            }
        }
        t.w.push_back(std::move(row));
    }
    return t;
}

LengthReport word_length(const Diagram &x) {
    Diagram d = reduce(x);
    LengthReport r;
    auto neg = classify(d.neg, d.p);
    auto pos = classify(d.pos, d.p);
    for (std::size_t i = 0; i < neg.size(); ++i) {
        int w = weight(neg[i], pos[i]);
        r.per_caret.push_back({static_cast<int>(i), neg[i], pos[i], w});
        r.total += w;
    }
    return r;
}

int length_of_minimal(const Diagram &d) {
    auto neg = classify(d.neg, d.p);
    auto pos = classify(d.pos, d.p);
    int total = 0;
    for (std::size_t i = 0; i < neg.size(); ++i)
        total += weight(neg[i], pos[i]);
    return total;
}

std::string report_string(const LengthReport &r) {
    std::ostringstream os;
    os << "caret\tneg\tpos\tweight\n";
    for (const auto &c : r.per_caret)
        os << c.index << '\t' << type_string(c.neg) << '\t' << type_string(c.pos) << '\t' << c.weight
           << '\n';
    os << "total\t\t\t" << r.total << '\n';
    return os.str();
}

namespace {

Diagram finite_letter(int p, const Letter &g) {
    if (g.index > p)
        throw std::invalid_argument("letter must be a finite generator");
    return letter_diagram(p, g);
}

} // namespace

bool subtree_condition(const Diagram &w, const Letter &g) {
    Diagram m = reduce(w);
    return contains(m.neg, finite_letter(w.p, g).pos, w.p);
}

bool minimality_condition(const Diagram &w, const Letter &g) {
    return is_minimal(multiply_unreduced(reduce(w), finite_letter(w.p, g)));
}

LengthRelation predicted_length_relation(const Diagram &w, const Letter &g) {
    if (!subtree_condition(w, g))
        return LengthRelation::Increases;
    if (!minimality_condition(w, g))
        return LengthRelation::DecreasesByOne;
    return LengthRelation::SingleCaretChange;
}

std::string relation_string(LengthRelation r) {
    switch (r) {
    case LengthRelation::Increases:
        return "INCREASES";
    case LengthRelation::DecreasesByOne:
        return "DECREASES_BY_ONE";
    case LengthRelation::SingleCaretChange:
        return "SINGLE_CARET_CHANGE";
    }
    return "?";
}

std::vector<CaretDiff> caret_type_diff(const Diagram &w, const Letter &g) {
    if (!subtree_condition(w, g))
        throw std::invalid_argument("caret_type_diff needs the subtree condition");
    Diagram m = reduce(w);
    Diagram prod = multiply_unreduced(m, finite_letter(w.p, g));
    auto on = classify(m.neg, m.p), op = classify(m.pos, m.p);
    auto nn = classify(prod.neg, m.p), np = classify(prod.pos, m.p);
    std::vector<CaretDiff> out;
    for (std::size_t i = 0; i < on.size(); ++i) {
        if (on[i] == nn[i] && op[i] == np[i])
            continue;
        out.push_back({static_cast<int>(i), on[i], op[i], nn[i], np[i],
                       weight(nn[i], np[i]) - weight(on[i], op[i])});
    }
    return out;
}

} // namespace thompson
