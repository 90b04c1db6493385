#pragma once

#include <string>
#include <vector>

#include "spec_dsl.hpp"

namespace polyface {

/// A realized zoo inhabitant, named by the DSL spec that produced it.
struct ZooEntry {
    std::string spec;
    GradedLattice lattice;
};

/**
 * One lattice per reachable family member of dimension <= dmax: simplices,
 * the full tdm grid and its duals, the minimizer family, ∇, and once- and
 * twice-stacked simplices.  This is the corpus the property-style checks
 * quantify over; entries are realized through the DSL so the zoo also
 * exercises the parse/realize path.
 */
inline std::vector<ZooEntry> construction_zoo(int dmax) {
    std::vector<std::string> specs;
    auto s = [](long long v) { return std::to_string(v); };
    // d starts at 2 throughout: a segment's order complex is a point pair,
    // which would vacuously break every connectivity-flavored sweep
    for (int d = 2; d <= dmax; ++d) specs.push_back("simplex(" + s(d) + ")");
    for (int d = 2; d <= dmax; ++d)
        for (int k = 2; k <= d; ++k) specs.push_back("gmin(" + s(d) + "," + s(k) + ")");
    for (int d = 2; d <= dmax; ++d)
        for (int i = 2; i <= d; ++i)
            for (int m = 1; 2 * m <= i; ++m) {
                std::string t = "tdm(" + s(d) + "," + s(i) + "," + s(m) + ")";
                specs.push_back(t);
                specs.push_back("dual(" + t + ")");
            }
    for (int d = 2; d <= dmax; ++d) specs.push_back("nabla(" + s(d) + ")");
    for (int d = 2; d <= dmax; ++d) {
        specs.push_back("stack(simplex(" + s(d) + "))");
        specs.push_back("stack(stack(simplex(" + s(d) + ")))");
    }
    std::vector<ZooEntry> zoo;
    zoo.reserve(specs.size());
    for (auto& sp : specs) {
        GradedLattice L = realize(sp);
        zoo.push_back(ZooEntry{std::move(sp), std::move(L)});
    }
    return zoo;
}

} // namespace polyface
