#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "thompson/diagram.hpp"

namespace thompson {

class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BfsOptions {
    std::size_t cap = 5'000'000;
    bool parallel = true;
    // every n-th dedup decision is re-checked with PL maps; 0 disables
    std::size_t spot_check_every = 100;
};

class DistanceMap {
  public:
    static constexpr std::uint32_t kNoParent = 0xffffffffu;

    int p = 1;
    int radius = 0;

    DistanceMap() = default;
    // the index holds views into keys_, so copies are not allowed
    DistanceMap(const DistanceMap &) = delete;
    DistanceMap &operator=(const DistanceMap &) = delete;
    DistanceMap(DistanceMap &&) = default;
    DistanceMap &operator=(DistanceMap &&) = default;

    std::size_t size() const { return keys_.size(); }
    const std::string &key(std::size_t i) const { return keys_[i]; }
    int distance(std::size_t i) const { return dist_[i]; }
    std::uint32_t parent(std::size_t i) const { return parent_[i]; }
    // letter applied to the parent to reach entry i
    Letter via(std::size_t i) const;
    Diagram diagram(std::size_t i) const { return parse_diagram(keys_[i]); }

    std::optional<std::size_t> find(std::string_view key) const;
    std::optional<int> distance_of(std::string_view key) const;
    std::vector<std::size_t> sphere_sizes() const;
    std::size_t spot_checks() const { return spot_checks_; }

    // letters from the identity to entry i along parent links
    Word path_to(std::size_t i) const;

    std::uint32_t insert(std::string key, int d, std::uint32_t parent, std::uint8_t letter);

    bool same_entries(const DistanceMap &o) const;
    std::string to_lines() const;

  private:
    std::deque<std::string> keys_;
    std::vector<int> dist_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> letter_;
    std::unordered_map<std::string_view, std::uint32_t> index_;
    std::size_t spot_checks_ = 0;

    friend DistanceMap bfs_ball(int, int, const BfsOptions &);
};

DistanceMap bfs_ball(int p, int radius, const BfsOptions &opts = {});
inline DistanceMap bfs_ball_serial(int p, int radius, BfsOptions opts = {}) {
    opts.parallel = false;
    return bfs_ball(p, radius, opts);
}

struct Mismatch {
    std::string key;
    int distance;
    int length;
};
std::vector<Mismatch> verify_metric(const DistanceMap &ball);
// Same check with a substitute weight-summing length function.
std::vector<Mismatch> verify_metric_with(const DistanceMap &ball,
                                         const std::function<int(const Diagram &)> &length);

// Length of an element, taken from the ball when present.
int ball_length(const DistanceMap &ball, const Diagram &d);

std::vector<std::string> find_dead_ends(const DistanceMap &ball);

struct DepthResult {
    enum class Status { NotDeadEnd, Depth, BeyondSearch } status;
    int depth = 0;
};
DepthResult dead_end_depth(const Diagram &w, int max_depth);

// Greedy geodesic; `order` lists the letters in tie-break priority for the
// last letter of the path.
Word extract_geodesic(const Diagram &w, const std::vector<Letter> &order);
Word extract_geodesic(const Diagram &w);
// Greedy geodesic choosing uniformly among the descending letters.
Word random_geodesic(const Diagram &w, std::mt19937 &rng);

struct Divergence {
    int distance_uv = 0;
    int divergence = 0; // min over sampled geodesic pairs of max synchronous distance
    std::size_t pairs = 0;
};
Divergence fellow_traveller_divergence(const Diagram &u, const Diagram &v,
                                       const DistanceMap *ball = nullptr,
                                       std::size_t variants = 24);

} // namespace thompson
