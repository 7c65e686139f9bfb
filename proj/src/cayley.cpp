#include "thompson/cayley.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "thompson/metric.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

namespace {

// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class FirstError {
  public:
    template <class F> void run(F &&f) {
        try {
            f();
        } catch (...) {
#pragma omp critical(thompson_first_error)
            if (!err_)
                err_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (err_)
            std::rethrow_exception(err_);
    }

  private:
    std::exception_ptr err_;
};

} // namespace

Letter DistanceMap::via(std::size_t i) const { return finite_letters(p).at(letter_[i]); }

std::optional<std::size_t> DistanceMap::find(std::string_view key) const {
    auto it = index_.find(key);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> DistanceMap::distance_of(std::string_view key) const {
    auto i = find(key);
    if (!i)
        return std::nullopt;
    return dist_[*i];
}

std::vector<std::size_t> DistanceMap::sphere_sizes() const {
    std::vector<std::size_t> s(radius + 1, 0);
    for (int d : dist_)
        ++s[d];
    return s;
}

Word DistanceMap::path_to(std::size_t i) const {
    Word w;
    while (parent_[i] != kNoParent) {
        w.push_back(via(i));
        i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::uint32_t DistanceMap::insert(std::string key, int d, std::uint32_t parent, std::uint8_t letter) {
    auto id = static_cast<std::uint32_t>(keys_.size());
    keys_.push_back(std::move(key));
    dist_.push_back(d);
    parent_.push_back(parent);
    letter_.push_back(letter);
    index_.emplace(keys_.back(), id);
    return id;
}

bool DistanceMap::same_entries(const DistanceMap &o) const {
    return p == o.p && radius == o.radius && keys_ == o.keys_ && dist_ == o.dist_ &&
           parent_ == o.parent_ && letter_ == o.letter_;
}

std::string DistanceMap::to_lines() const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
        s += keys_[i];
        s += '\t';
        s += std::to_string(dist_[i]);
        s += '\t';
        s += parent_[i] == kNoParent ? std::string("-") : keys_[parent_[i]];
        s += '\n';
    }
    return s;
}

DistanceMap bfs_ball(int p, int radius, const BfsOptions &opts) {
    if (radius < 0)
        throw std::invalid_argument("radius must be non-negative");
    const auto letters = finite_letters(p);
    const int nl = static_cast<int>(letters.size());
    std::vector<Diagram> gens;
    std::vector<PLMap> gen_maps;
    for (const auto &l : letters) {
        gens.push_back(letter_diagram(p, l));
        gen_maps.push_back(diagram_to_map(gens.back()));
    }

    DistanceMap m;
    m.p = p;
    m.radius = radius;
    m.insert(diagram_string(identity(p)), 0, DistanceMap::kNoParent, 0);
    std::vector<std::uint32_t> frontier{0};
    std::vector<Diagram> fdiag{identity(p)};
    std::size_t decisions = 0;

    for (int d = 1; d <= radius && !frontier.empty(); ++d) {
        const long nf = static_cast<long>(frontier.size());
        std::vector<Diagram> cand(static_cast<std::size_t>(nf) * nl);
        std::vector<std::string> ckey(cand.size());
        auto expand = [&](long f) {
            for (int l = 0; l < nl; ++l) {
                auto &c = cand[f * nl + l];
                c = multiply(fdiag[f], gens[l]);
                ckey[f * nl + l] = diagram_string(c);
            }
        };
        if (opts.parallel) {
            FirstError err;
#pragma omp parallel for schedule(dynamic, 64)
            for (long f = 0; f < nf; ++f)
                err.run([&] { expand(f); });
            err.rethrow();
        } else {
            // serial reference kernel
            for (long f = 0; f < nf; ++f)
                expand(f);
        }

        // merge in (frontier, letter) order: the first discoverer is the parent
        std::vector<std::uint32_t> next;
        std::vector<Diagram> ndiag;
        for (std::size_t c = 0; c < cand.size(); ++c) {
            auto hit = m.find(ckey[c]);
            const std::size_t f = c / nl;
            const int l = static_cast<int>(c % nl);
            if (opts.spot_check_every && ++decisions % opts.spot_check_every == 0) {
                PLMap got = diagram_to_map(cand[c]);
                if (!map_equals(got, compose(diagram_to_map(fdiag[f]), gen_maps[l])))
                    throw std::logic_error("product disagrees with map composition");
                if (hit && !map_equals(got, diagram_to_map(m.diagram(*hit))))
                    throw std::logic_error("equal keys with different maps");
                ++m.spot_checks_;
            }
            if (hit)
                continue;
            if (m.size() >= opts.cap)
                throw CapExceeded("ball exceeds cap of " + std::to_string(opts.cap) + " entries");
            next.push_back(m.insert(std::move(ckey[c]), d, frontier[f], static_cast<std::uint8_t>(l)));
            ndiag.push_back(std::move(cand[c]));
        }
        frontier = std::move(next);
        fdiag = std::move(ndiag);
    }
    return m;
}

std::vector<Mismatch> verify_metric_with(const DistanceMap &ball,
                                         const std::function<int(const Diagram &)> &length) {
    const long n = static_cast<long>(ball.size());
    std::vector<int> got(n);
    FirstError err;
#pragma omp parallel for schedule(dynamic, 256)
    for (long i = 0; i < n; ++i)
        err.run([&] { got[i] = length(ball.diagram(i)); });
    err.rethrow();
    std::vector<Mismatch> out;
    for (long i = 0; i < n; ++i)
        if (got[i] != ball.distance(i))
            out.push_back({ball.key(i), ball.distance(i), got[i]});
    return out;
}

std::vector<Mismatch> verify_metric(const DistanceMap &ball) {
    return verify_metric_with(ball, [](const Diagram &d) { return length_of_minimal(d); });
}

int ball_length(const DistanceMap &ball, const Diagram &d) {
    Diagram r = reduce(d);
    if (auto hit = ball.distance_of(diagram_string(r)))
        return *hit;
    return length_of_minimal(r);
}

std::vector<std::string> find_dead_ends(const DistanceMap &ball) {
    if (ball.radius < 1)
        throw std::invalid_argument("dead-end search needs radius at least 1");
    std::vector<Diagram> gens;
    for (const auto &l : finite_letters(ball.p))
        gens.push_back(letter_diagram(ball.p, l));
    const long n = static_cast<long>(ball.size());
    std::vector<char> dead(n, 0);
    auto check = [&](long i) {
        const int d = ball.distance(i);
        if (d == 0 || d > ball.radius - 1)
            return;
        Diagram w = ball.diagram(i);
        for (const auto &g : gens) {
            int lg = ball_length(ball, multiply(w, g));
            if (lg == d)
                throw std::logic_error("one-letter product with unchanged length");
            if (lg > d)
                return;
        }
        dead[i] = 1;
    };
    FirstError err;
#pragma omp parallel for schedule(dynamic, 256)
    for (long i = 0; i < n; ++i)
        err.run([&] { check(i); });
    err.rethrow();
    std::vector<std::string> out;
    for (long i = 0; i < n; ++i)
        if (dead[i])
            out.push_back(ball.key(i));
    return out;
}

DepthResult dead_end_depth(const Diagram &w, int max_depth) {
    const int p = w.p;
    std::vector<Diagram> gens;
    for (const auto &l : finite_letters(p))
        gens.push_back(letter_diagram(p, l));
    const Diagram start = reduce(w);
    const int L = length_of_minimal(start);

    // level t holds every element reachable by a path of exactly t letters
    std::vector<Diagram> level{start};
    for (int t = 1; t <= max_depth + 1; ++t) {
        std::set<std::string> seen;
        std::vector<Diagram> next;
        for (const auto &x : level)
            for (const auto &g : gens) {
                Diagram y = multiply(x, g);
                if (length_of_minimal(y) > L) {
                    if (t == 1)
                        return {DepthResult::Status::NotDeadEnd, 0};
                    return {DepthResult::Status::Depth, t - 1};
                }
                if (seen.insert(diagram_string(y)).second)
                    next.push_back(std::move(y));
            }
        level = std::move(next);
    }
    return {DepthResult::Status::BeyondSearch, max_depth};
}

namespace {

// Walk down from w; `pick` chooses among the letters h with |w h^-1| = |w| - 1.
template <class Pick> Word descend(const Diagram &w, const std::vector<Letter> &order, Pick pick) {
    const int p = w.p;
    Diagram cur = reduce(w);
    int L = length_of_minimal(cur);
    Word rev;
    while (L > 0) {
        std::vector<std::pair<Letter, Diagram>> down;
        for (const auto &h : order) {
            Diagram c = multiply(cur, inverse(letter_diagram(p, h)));
            if (length_of_minimal(c) == L - 1)
                down.emplace_back(h, std::move(c));
        }
        if (down.empty())
            throw std::logic_error("no length-decreasing letter; metric is inconsistent");
        auto &chosen = down[pick(down.size())];
        rev.push_back(chosen.first);
        cur = std::move(chosen.second);
        --L;
    }
    return Word(rev.rbegin(), rev.rend());
}

} // namespace

Word extract_geodesic(const Diagram &w, const std::vector<Letter> &order) {
    return descend(w, order, [](std::size_t) { return 0; });
}

Word random_geodesic(const Diagram &w, std::mt19937 &rng) {
    return descend(w, finite_letters(w.p), [&](std::size_t n) { return rng() % n; });
}

Word extract_geodesic(const Diagram &w) { return extract_geodesic(w, finite_letters(w.p)); }

namespace {

std::vector<std::vector<Letter>> letter_orders(int p, std::size_t count) {
    auto base = finite_letters(p);
    std::vector<int> perm(base.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Letter>> out;
    std::mt19937 rng(12345);
    while (out.size() < count) {
        std::vector<Letter> o;
        for (int k : perm)
            o.push_back(base[k]);
        out.push_back(std::move(o));
        if (base.size() <= 5) {
            if (!std::next_permutation(perm.begin(), perm.end()))
                break;
        } else {
            std::shuffle(perm.begin(), perm.end(), rng);
        }
    }
    return out;
}

std::vector<Diagram> prefixes(int p, const Word &w) {
    std::vector<Diagram> v{identity(p)};
    for (const auto &l : w)
        v.push_back(multiply(v.back(), letter_diagram(p, l)));
    return v;
}

} // namespace

Divergence fellow_traveller_divergence(const Diagram &u, const Diagram &v, const DistanceMap *ball,
                                       std::size_t variants) {
    if (u.p != v.p)
        throw std::invalid_argument("arity mismatch");
    const int p = u.p;
    auto dist = [&](const Diagram &a, const Diagram &b) {
        Diagram q = multiply(inverse(a), b);
        return ball ? ball_length(*ball, q) : length_of_minimal(q);
    };

    std::set<std::string> seen_u, seen_v;
    std::vector<std::vector<Diagram>> pu, pv;
    auto keep = [&](const Word &gu, const Word &gv) {
        if (seen_u.insert(word_string(gu)).second)
            pu.push_back(prefixes(p, gu));
        if (seen_v.insert(word_string(gv)).second)
            pv.push_back(prefixes(p, gv));
    };
    for (const auto &order : letter_orders(p, variants))
        keep(extract_geodesic(u, order), extract_geodesic(v, order));
    std::mt19937 rng(2024);
    for (std::size_t t = 0; t < variants; ++t)
        keep(random_geodesic(u, rng), random_geodesic(v, rng));

    Divergence r;
    r.distance_uv = dist(u, v);
    r.divergence = -1;
    for (const auto &a : pu)
        for (const auto &b : pv) {
            int worst = 0;
            const std::size_t T = std::max(a.size(), b.size());
            for (std::size_t t = 0; t < T; ++t) {
                const Diagram &x = a[std::min(t, a.size() - 1)];
                const Diagram &y = b[std::min(t, b.size() - 1)];
                worst = std::max(worst, dist(x, y));
            }
            if (r.divergence < 0 || worst < r.divergence)
                r.divergence = worst;
            ++r.pairs;
        }
    return r;
}

} // namespace thompson
