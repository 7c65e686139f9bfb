#include "thompson/plmap.hpp"

#include <algorithm>

namespace thompson {

namespace {

using boost::multiprecision::cpp_int;

bool is_power_of(cpp_int v, int N) {
    if (v <= 0)
        return false;
    while (v % N == 0)
        v /= N;
    return v == 1;
}

// denominator divides some power of N
bool n_adic(const Rational &q, int N) {
    cpp_int d = denominator(q);
    for (cpp_int g = gcd(d, cpp_int(N)); g > 1; g = gcd(d, cpp_int(N)))
        d /= g;
    return d == 1;
}

Rational slope(const std::pair<Rational, Rational> &a, const std::pair<Rational, Rational> &b) {
    return (b.second - a.second) / (b.first - a.first);
}

} // namespace

PLMap identity_map(int N) { return PLMap{N, {{0, 0}, {1, 1}}}; }

PLMap normalize(PLMap f) {
    std::vector<std::pair<Rational, Rational>> out;
    for (auto &pt : f.points) {
        if (!out.empty() && out.back().first == pt.first)
            continue;
        while (out.size() >= 2 && slope(out[out.size() - 2], out.back()) == slope(out.back(), pt))
            out.pop_back();
        out.push_back(std::move(pt));
    }
    f.points = std::move(out);
    return f;
}

void validate(const PLMap &f) {
    const auto &pts = f.points;
    if (pts.size() < 2 || pts.front() != std::pair<Rational, Rational>{0, 0} ||
        pts.back() != std::pair<Rational, Rational>{1, 1})
        throw InvalidMap("map must fix 0 and 1");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!n_adic(pts[i].first, f.N) || !n_adic(pts[i].second, f.N))
            throw InvalidMap("breakpoint outside Z[1/N]");
        if (i == 0)
            continue;
        if (pts[i].first <= pts[i - 1].first || pts[i].second <= pts[i - 1].second)
            throw InvalidMap("map is not strictly increasing");
        Rational s = slope(pts[i - 1], pts[i]);
        cpp_int num = numerator(s), den = denominator(s);
        if (!((num == 1 && is_power_of(den, f.N)) || (den == 1 && is_power_of(num, f.N))))
            throw InvalidMap("slope is not a power of N");
    }
}

PLMap diagram_to_map(const Diagram &d) {
    auto dom = leaf_intervals(d.neg, d.p);
    auto ran = leaf_intervals(d.pos, d.p);
    PLMap f{d.p + 1, {}};
    f.points.reserve(dom.size() + 1);
    for (std::size_t i = 0; i < dom.size(); ++i)
        f.points.emplace_back(dom[i].lo, ran[i].lo);
    f.points.emplace_back(1, 1);
    return normalize(std::move(f));
}

Rational map_at(const PLMap &f, const Rational &x) {
    const auto &pts = f.points;
    auto it = std::upper_bound(pts.begin(), pts.end(), x,
                               [](const Rational &v, const auto &pt) { return v < pt.first; });
    if (it == pts.begin() || (it == pts.end() && x > pts.back().first))
        throw std::out_of_range("point outside [0,1]");
    if (it == pts.end())
        return pts.back().second;
    const auto &b = *it;
    const auto &a = *(it - 1);
    return a.second + (x - a.first) * slope(a, b);
}

PLMap compose(const PLMap &f, const PLMap &g) {
    if (f.N != g.N)
        throw std::invalid_argument("maps over different N");
    // breakpoints of f∘g: those of g, plus preimages under g of those of f
    PLMap ginv = invert(g);
    std::vector<Rational> xs;
    xs.reserve(f.points.size() + g.points.size());
    for (const auto &pt : g.points)
        xs.push_back(pt.first);
    for (const auto &pt : f.points)
        xs.push_back(map_at(ginv, pt.first));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    PLMap h{f.N, {}};
    h.points.reserve(xs.size());
    for (auto &x : xs)
        h.points.emplace_back(x, map_at(f, map_at(g, x)));
    h = normalize(std::move(h));
    validate(h);
    return h;
}

PLMap invert(const PLMap &f) {
    PLMap r{f.N, {}};
    r.points.reserve(f.points.size());
    for (const auto &[x, y] : f.points)
        r.points.emplace_back(y, x);
    return r;
}

bool map_equals(const PLMap &f, const PLMap &g) {
    return f.N == g.N && normalize(f).points == normalize(g).points;
}

std::string map_string(const PLMap &f) {
    std::string s;
    for (const auto &[x, y] : f.points) {
        if (!s.empty())
            s += ' ';
        s += "(" + x.str() + "," + y.str() + ")";
    }
    return s;
}

} // namespace thompson
