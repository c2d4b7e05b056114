#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "pierce/family.hpp"

namespace pierce {

namespace detail {

/// First k-combination of {0..n-1} in lexicographic order; empty when invalid.
inline std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

/// Advances c to the next k-combination of {0..n-1}; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

// Report of a (p,q)-property check. When the property fails, `violation`
// holds the labels of a p-subset none of whose q-subsets intersect. The
// witness table lists every q-subset checked, in canonical subset order, with
// its common point when one exists.
struct PqReport {
    bool holds = false;
    int p = 0;
    int q = 0;
    std::optional<std::vector<std::string>> violation;
    std::vector<std::pair<std::vector<std::string>, std::optional<Point>>> witness_table;
};

// Exhaustive (p,q)-property check: every p-subset of the family must contain
// some q-subset with a common point. q-subset feasibility is memoized across
// p-subsets; subsets are scanned in lexicographic index order, so the first
// violation reported is canonical.
inline PqReport has_pq_property(const Family& f, int p, int q) {
    const std::size_t n = f.regions.size();
    if (q < 2 || p < q || static_cast<std::size_t>(p) > n)
        throw Error(Errc::bad_params, "need 2 <= q <= p <= family size, got p=" + std::to_string(p) +
                                          " q=" + std::to_string(q) + " n=" + std::to_string(n));

    PqReport report;
    report.p = p;
    report.q = q;
    report.holds = true;

    std::map<std::vector<std::size_t>, std::optional<Point>> memo;
    auto q_subset_witness = [&](const std::vector<std::size_t>& qs) -> const std::optional<Point>& {
        auto it = memo.find(qs);
        if (it == memo.end()) {
            std::vector<HalfPlane> all;
            for (std::size_t i : qs)
                all.insert(all.end(), f.regions[i].constraints.begin(),
                           f.regions[i].constraints.end());
            it = memo.emplace(qs, feasible(all)).first;
        }
        return it->second;
    };
    auto fill_witness_table = [&] {
        for (const auto& [qs, witness] : memo) { // map order = canonical subset order
            std::vector<std::string> labels;
            for (std::size_t i : qs) labels.push_back(f.regions[i].label);
            report.witness_table.emplace_back(std::move(labels), witness);
        }
    };

    auto ps = detail::first_combination(static_cast<std::size_t>(p));
    do {
        bool some_q_intersects = false;
        auto qs_local = detail::first_combination(static_cast<std::size_t>(q));
        do {
            std::vector<std::size_t> qs(qs_local.size());
            for (std::size_t i = 0; i < qs_local.size(); ++i) qs[i] = ps[qs_local[i]];
            if (q_subset_witness(qs)) {
                some_q_intersects = true;
                break;
            }
        } while (detail::next_combination(qs_local, ps.size()));

        if (!some_q_intersects) {
            report.holds = false;
            std::vector<std::string> labels;
            for (std::size_t i : ps) labels.push_back(f.regions[i].label);
            report.violation = std::move(labels);
            fill_witness_table();
            return report;
        }
    } while (detail::next_combination(ps, n));
    fill_witness_table();
    return report;
}

/// All 3-subsets with a common point, each with its deterministic witness.
inline std::vector<std::pair<std::array<std::string, 3>, Point>> intersecting_triples(
    const Family& f) {
    std::vector<std::pair<std::array<std::string, 3>, Point>> out;
    const std::size_t n = f.regions.size();
    if (n < 3) return out;
    auto c = detail::first_combination(3);
    do {
        std::vector<HalfPlane> all;
        for (std::size_t i : c)
            all.insert(all.end(), f.regions[i].constraints.begin(), f.regions[i].constraints.end());
        if (auto w = feasible(all)) {
            out.push_back({{f.regions[c[0]].label, f.regions[c[1]].label, f.regions[c[2]].label}, *w});
        }
    } while (detail::next_combination(c, n));
    return out;
}

} // namespace pierce
