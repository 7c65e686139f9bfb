#include "thompson/families.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "thompson/cayley.hpp"
#include "thompson/metric.hpp"

namespace thompson {

Word seesaw_letters(const SeesawParams &sp) {
    const long p = sp.p, m = sp.m, n = sp.n;
    if (m < 2 || n < 1)
        throw std::invalid_argument("seesaw word needs m >= 2 and n >= 1");
    Word w;
    for (long t = 0; t < m - 1; ++t)
        w.push_back({0, 1});
    w.push_back({p, 1});
    w.push_back({n * p * p + (m + n) * p, 1});
    for (long i = 1; i <= p * n; ++i)
        w.push_back({n * p * p + (m + n - i + 1) * p - i, -1});
    for (long t = 0; t < m; ++t)
        w.push_back({0, -1});
    return w;
}

Diagram seesaw_word(const SeesawParams &sp) { return evaluate_word(sp.p, seesaw_letters(sp)); }

SeesawReport verify_seesaw(const Diagram &w0, const Letter &g, int k) {
    const int p = w0.p;
    Diagram w = reduce(w0);
    SeesawReport r;
    r.length = length_of_minimal(w);
    const Diagram gd = letter_diagram(p, g);
    const Letter ginv{g.index, -g.exponent};
    for (int eps : {1, -1}) {
        Diagram cur = w;
        const Diagram step = eps > 0 ? gd : inverse(gd);
        for (int q = 1; q <= k; ++q) {
            cur = multiply(cur, step);
            const int l = eps * q;
            const int lq = length_of_minimal(cur);
            r.profile.emplace_back(l, lq);
            if (lq != r.length - q) {
                std::string f = "|w g^" + std::to_string(l) + "| = " + std::to_string(lq) +
                                ", expected " + std::to_string(r.length - q);
                r.failures.push_back(f);
                r.literal_failures.push_back(f);
            }
            if (q >= k)
                continue;
            for (const auto &h : finite_letters(p)) {
                const bool skip = eps > 0 ? h == g : h == ginv;
                const bool skip_literal = h == g;
                if (skip && skip_literal)
                    continue;
                const int lh = length_of_minimal(multiply(cur, letter_diagram(p, h)));
                if (lh >= lq)
                    continue;
                std::string f = "|w g^" + std::to_string(l) + " " + letter_string(h) +
                                "| = " + std::to_string(lh) + " < " + std::to_string(lq);
                if (!skip)
                    r.failures.push_back(f);
                if (!skip_literal)
                    r.literal_failures.push_back(f);
            }
        }
    }
    r.pass = r.failures.empty();
    r.pass_literal = r.literal_failures.empty();
    return r;
}

bool is_dead_end(const Diagram &w0) {
    Diagram w = reduce(w0);
    const int L = length_of_minimal(w);
    if (L == 0)
        return false;
    for (const auto &g : finite_letters(w.p)) {
        const int lg = length_of_minimal(multiply(w, letter_diagram(w.p, g)));
        if (lg == L)
            throw std::logic_error("one-letter product with unchanged length");
        if (lg > L)
            return false;
    }
    return true;
}

namespace {

bool is_left(const CaretType &t) { return t.kind == Kind::L0 || t.kind == Kind::LL; }
bool is_right(const CaretType &t) {
    return t.kind == Kind::R0 || t.kind == Kind::RR || t.kind == Kind::Rj;
}
bool is_middle(const CaretType &t) { return t.kind == Kind::M0 || t.kind == Kind::Mij; }

std::string pair_string(const LabeledCaret &c) {
    return "(" + type_string(c.neg) + "," + type_string(c.pos) + ")";
}

} // namespace

DeadEndReport structural_dead_end_check(const Diagram &w0) {
    const Diagram w = reduce(w0);
    const int p = w.p;
    DeadEndReport r;

    std::vector<std::pair<std::string, std::vector<int>>> slots{{"B", {}}, {"A", {0}}};
    for (int i = 1; i < p; ++i)
        slots.push_back({"C" + std::to_string(i), {i}});
    slots.push_back({"E", {p}});
    slots.push_back({"D", {p, 0}});
    slots.push_back({"F", {p, p}});

    auto layout = caret_layout(w.neg, p);
    for (const auto &[label, addr] : slots)
        if (caret_at(layout, addr) < 0)
            r.violations.push_back("MISSING_CARET " + label);
    if (!r.violations.empty())
        return r;

    auto neg = classify(layout, p);
    auto pos = classify(w.pos, p);
    auto get = [&](const std::string &label) -> const LabeledCaret & {
        for (const auto &c : r.carets)
            if (c.label == label)
                return c;
        throw std::logic_error("unknown label");
    };
    for (const auto &[label, addr] : slots) {
        int num = layout[caret_at(layout, addr)].number;
        r.carets.push_back({label, addr, num, neg[num], pos[num]});
    }
    auto fail = [&](const LabeledCaret &c) { r.violations.push_back(c.label + " " + pair_string(c)); };

    const auto &b = get("B");
    if (!(b.neg.kind == Kind::LL && b.pos.kind == Kind::LL))
        fail(b);

    const auto &a = get("A");
    if (!((is_left(a.neg) && is_left(a.pos)) || (a.neg.kind == Kind::LL && is_middle(a.pos))))
        fail(a);

    for (int i = 1; i < p; ++i) {
        const auto &c = get("C" + std::to_string(i));
        bool ok = c.pos.kind == Kind::LL || c.neg.kind == Kind::Mij;
        if (!ok && c.neg.kind == Kind::M0) {
            ok = (c.pos.kind == Kind::Rj && c.pos.j <= i) || (c.pos.kind == Kind::M0 && c.pos.i <= i) ||
                 (c.pos.kind == Kind::Mij && c.pos.j <= i);
        }
        if (!ok)
            fail(c);
    }

    const auto &d = get("D");
    if (d.neg.kind == Kind::M0 && (d.pos.kind == Kind::RR || d.pos.kind == Kind::R0))
        fail(d);

    const auto &e = get("E");
    const bool e_ok = (e.neg.kind == Kind::R0 && e.pos.kind == Kind::RR) ||
                      (e.neg.kind == Kind::RR && e.pos.kind == Kind::R0) ||
                      (e.neg.kind == Kind::RR && e.pos.kind == Kind::RR);
    if (!e_ok)
        fail(e);

    const auto &f = get("F");
    if (!(is_right(f.neg) && is_right(f.pos)))
        fail(f);

    r.is_dead_end = r.violations.empty();
    return r;
}

std::string report_json(const DeadEndReport &r) {
    nlohmann::json j;
    j["schema"] = "thompson-metric/1";
    j["is_dead_end"] = r.is_dead_end;
    j["carets"] = nlohmann::json::array();
    for (const auto &c : r.carets)
        j["carets"].push_back({{"label", c.label},
                               {"index", c.number},
                               {"neg", type_string(c.neg)},
                               {"pos", type_string(c.pos)}});
    j["violations"] = r.violations;
    return j.dump();
}

DepthTwoReport verify_depth_two(const Diagram &w0) {
    if (!is_dead_end(w0))
        throw std::invalid_argument("verify_depth_two needs a dead end");
    const Diagram w = reduce(w0);
    const int p = w.p;
    const int L = length_of_minimal(w);
    DepthTwoReport r;

    auto letters = finite_letters(p);
    r.two_step_stays = true;
    for (const auto &g1 : letters) {
        Diagram a = multiply(w, letter_diagram(p, g1));
        for (const auto &g2 : letters)
            if (length_of_minimal(multiply(a, letter_diagram(p, g2))) > L)
                r.two_step_stays = false;
    }

    r.witnesses_exceed = true;
    const Diagram back = multiply(w, inverse(make_generator(p, 0)));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j) {
            Diagram x = multiply(multiply(back, make_generator(p, i)), make_generator(p, j));
            if (length_of_minimal(x) <= L)
                r.witnesses_exceed = false;
        }

    auto depth = dead_end_depth(w, 2);
    r.depth_two = r.two_step_stays && depth.status == DepthResult::Status::Depth && depth.depth == 2;
    return r;
}

} // namespace thompson
