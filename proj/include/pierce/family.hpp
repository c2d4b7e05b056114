#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pierce/region.hpp"

namespace pierce {

// Ordered list of labeled convex regions. Order is meaningful (index n of a
// construction = position) and labels are unique.
struct Family {
    std::string name;
    std::vector<ConvexRegion> regions;

    std::optional<std::size_t> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < regions.size(); ++i)
            if (regions[i].label == label) return i;
        return std::nullopt;
    }

    const ConvexRegion& at(const std::string& label) const {
        if (auto i = index_of(label)) return regions[*i];
        throw Error(Errc::invalid_input, "no region labeled '" + label + "' in family '" + name + "'");
    }
};

inline void check_unique_labels(const Family& f) {
    std::set<std::string> seen;
    for (const ConvexRegion& r : f.regions)
        if (!seen.insert(r.label).second)
            throw Error(Errc::duplicate_label, "'" + r.label + "' in family '" + f.name + "'");
}

} // namespace pierce
