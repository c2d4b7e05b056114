#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pierce/family.hpp"

namespace pierce {

namespace detail {

/// Small fixed-capacity-free bitset over region indices.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t n) : bits_((n + 63) / 64, 0), size_(n) {}

    void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1; }
    std::size_t size() const { return size_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : bits_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool all() const { return count() == size_; }
    bool none() const {
        return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
    }
    bool subset_of(const IndexSet& o) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }
    IndexSet& operator|=(const IndexSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    /// Elements of *this not in o.
    std::size_t count_minus(const IndexSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            c += static_cast<std::size_t>(__builtin_popcountll(bits_[i] & ~o.bits_[i]));
        return c;
    }
    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.size_ == b.size_ && a.bits_ == b.bits_;
    }

private:
    std::vector<std::uint64_t> bits_;
    std::size_t size_ = 0;
};

} // namespace detail

// Finite point set guaranteed to realize every membership pattern the family
// can produce: the vertices of the arrangement of all constraint boundary
// lines plus an enclosing box wide enough that every nonempty intersection
// cell keeps a vertex inside it.
struct CandidateSet {
    std::vector<Point> points;                  // lexicographically sorted
    std::vector<detail::IndexSet> patterns;     // patterns[i] = regions containing points[i]
    Rational box_half_width;
};

inline CandidateSet candidate_points(const Family& f) {
    for (const ConvexRegion& r : f.regions)
        if (is_empty(r)) throw Error(Errc::empty_region, "region '" + r.label + "' is empty");

    std::vector<Line> lines;
    for (const ConvexRegion& r : f.regions)
        for (const HalfPlane& h : r.constraints) lines.emplace_back(h);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    // Box half-width M = 1 + 2 * max(|arrangement vertex coordinates|,
    // |axis intercepts|); recorded for reproducibility.
    Rational extent(0);
    auto stretch = [&extent](const Rational& v) {
        if (rational_abs(v) > extent) extent = rational_abs(v);
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].a != 0) stretch(lines[i].c / lines[i].a);
        if (lines[i].b != 0) stretch(lines[i].c / lines[i].b);
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto p = line_intersection(lines[i], lines[j])) {
                stretch(p->x);
                stretch(p->y);
            }
    }
    const Rational m = 1 + 2 * extent;
    lines.emplace_back(HalfPlane(1, 0, m));
    lines.emplace_back(HalfPlane(1, 0, -m));
    lines.emplace_back(HalfPlane(0, 1, m));
    lines.emplace_back(HalfPlane(0, 1, -m));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    std::vector<Point> pts;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto p = line_intersection(lines[i], lines[j]))
                if (std::any_of(f.regions.begin(), f.regions.end(),
                                [&](const ConvexRegion& r) { return contains(r, *p); }))
                    pts.push_back(*p);
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    CandidateSet cs;
    cs.box_half_width = m;
    cs.points = std::move(pts);
    cs.patterns.reserve(cs.points.size());
    for (const Point& p : cs.points) {
        detail::IndexSet pat(f.regions.size());
        for (std::size_t r = 0; r < f.regions.size(); ++r)
            if (contains(f.regions[r], p)) pat.set(r);
        cs.patterns.push_back(std::move(pat));
    }
    return cs;
}

// Minimum transversal with certificate. `optimal` is true when the search was
// exhaustive; `explored_nodes` counts branch-and-bound nodes for audit.
struct PiercingResult {
    int tau = 0;
    std::vector<Point> transversal;
    bool optimal = false;
    long long explored_nodes = 0;
};

namespace detail {

// Exact set cover search: can regions not yet in `covered` be covered by at
// most `limit` patterns with index >= min_candidate? Branches on the
// uncovered region with the fewest covering candidates, candidates tried in
// index order. Returns a cover (by candidate index) or nothing.
class CoverSearch {
public:
    CoverSearch(const std::vector<IndexSet>& patterns, std::size_t universe)
        : patterns_(patterns), universe_(universe) {}

    long long explored() const { return explored_; }

    std::optional<std::vector<std::size_t>> find_cover(const IndexSet& covered, int limit,
                                                       std::size_t min_candidate = 0) {
        ++explored_;
        if (covered.all()) return std::vector<std::size_t>{};
        if (limit <= 0) return std::nullopt;

        // Most-constrained uncovered region.
        std::size_t best_region = universe_;
        std::size_t best_count = patterns_.size() + 1;
        for (std::size_t r = 0; r < universe_; ++r) {
            if (covered.test(r)) continue;
            std::size_t cnt = 0;
            for (std::size_t c = min_candidate; c < patterns_.size(); ++c)
                if (patterns_[c].test(r)) ++cnt;
            if (cnt < best_count) {
                best_count = cnt;
                best_region = r;
            }
        }
        if (best_count == 0) return std::nullopt; // some region not coverable

        for (std::size_t c = min_candidate; c < patterns_.size(); ++c) {
            if (!patterns_[c].test(best_region)) continue;
            IndexSet next = covered;
            next |= patterns_[c];
            if (auto rest = find_cover(next, limit - 1, min_candidate)) {
                rest->push_back(c);
                std::sort(rest->begin(), rest->end());
                return rest;
            }
        }
        return std::nullopt;
    }

private:
    const std::vector<IndexSet>& patterns_;
    std::size_t universe_;
    long long explored_ = 0;
};

} // namespace detail

/// true plus an empty list when every region holds some point; otherwise the
/// labels of the regions missed.
inline std::pair<bool, std::vector<std::string>> verify_transversal(const Family& f,
                                                                    const std::vector<Point>& pts) {
    std::vector<std::string> missed;
    for (const ConvexRegion& r : f.regions)
        if (!std::any_of(pts.begin(), pts.end(), [&](const Point& p) { return contains(r, p); }))
            missed.push_back(r.label);
    return {missed.empty(), missed};
}

// Exact piercing number over the candidate arrangement. Helly shortcut first:
// in the plane, a finite family of convex sets in which every triple meets has
// a common point, so one feasibility test of all constraints settles tau = 1.
// Otherwise branch-and-bound set cover over candidate patterns, then a
// lexicographic refinement pass (lowest candidate indices first) so the
// returned transversal is canonical.
inline PiercingResult piercing_number(const Family& f, std::optional<int> max_size = {}) {
    PiercingResult result;
    if (f.regions.empty()) {
        result.optimal = true;
        return result;
    }

    std::vector<HalfPlane> all;
    for (const ConvexRegion& r : f.regions) {
        if (is_empty(r)) throw Error(Errc::empty_region, "region '" + r.label + "' is empty");
        all.insert(all.end(), r.constraints.begin(), r.constraints.end());
    }
    if (auto w = feasible(all)) {
        result.tau = 1;
        result.transversal = {*w};
        result.optimal = true;
        result.explored_nodes = 0;
        return result;
    }

    const CandidateSet cs = candidate_points(f);
    const std::size_t n = f.regions.size();
    const detail::IndexSet empty_cover(n);

    // Pattern-domination pruning: only maximal patterns matter for the
    // minimum (a dominated candidate can always be swapped for its
    // dominator). Equal patterns keep their lowest index.
    std::vector<detail::IndexSet> maximal;
    for (std::size_t c = 0; c < cs.patterns.size(); ++c) {
        bool dominated = false;
        for (std::size_t d = 0; d < cs.patterns.size() && !dominated; ++d) {
            if (d == c || !cs.patterns[c].subset_of(cs.patterns[d])) continue;
            dominated = !(cs.patterns[d] == cs.patterns[c]) || d < c;
        }
        if (!dominated) maximal.push_back(cs.patterns[c]);
    }
    detail::CoverSearch search(maximal, n);

    // Greedy seed gives an upper bound, then descend to the exact minimum.
    int upper = 0;
    {
        detail::IndexSet covered(n);
        while (!covered.all()) {
            std::size_t best = maximal.size();
            std::size_t best_gain = 0;
            for (std::size_t c = 0; c < maximal.size(); ++c) {
                const std::size_t gain = maximal[c].count_minus(covered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            if (best == maximal.size())
                throw Error(Errc::invalid_input, "candidate set fails to cover a nonempty region");
            covered |= maximal[best];
            ++upper;
        }
    }

    int tau = upper;
    for (int k = 2; k < upper; ++k) {
        if (search.find_cover(empty_cover, k)) {
            tau = k;
            break;
        }
    }
    if (max_size && tau > *max_size) {
        result.explored_nodes = search.explored();
        throw Error(Errc::budget_exceeded, "no transversal of size <= " + std::to_string(*max_size) +
                                               "; proven lower bound " + std::to_string(tau));
    }

    // Lexicographically smallest cover of size tau by candidate index: extend
    // the prefix with the smallest index that still leaves a completion. The
    // completion queries run over the full candidate list, since domination
    // does not respect the index-suffix restriction.
    detail::CoverSearch refine(cs.patterns, n);
    std::vector<std::size_t> chosen;
    detail::IndexSet covered(n);
    int remaining = tau;
    std::size_t start = 0;
    while (remaining > 0) {
        bool extended = false;
        for (std::size_t c = start; c < cs.patterns.size(); ++c) {
            if (cs.patterns[c].count_minus(covered) == 0) continue;
            detail::IndexSet next = covered;
            next |= cs.patterns[c];
            if (refine.find_cover(next, remaining - 1, c + 1)) {
                chosen.push_back(c);
                covered = next;
                --remaining;
                start = c + 1;
                extended = true;
                break;
            }
        }
        if (!extended)
            throw Error(Errc::invalid_input, "lexicographic refinement lost the cover");
    }

    result.tau = tau;
    for (std::size_t c : chosen) result.transversal.push_back(cs.points[c]);
    result.optimal = true;
    result.explored_nodes = search.explored() + refine.explored();
    return result;
}

} // namespace pierce
