#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace polyface {

/// Render a face as "{a b c}" using the supplied vertex labels.
inline std::string face_label(const std::vector<int>& face,
                              const std::vector<std::string>& labels) {
    std::string s = "{";
    for (std::size_t j = 0; j < face.size(); ++j) {
        if (j) s += ' ';
        s += labels[static_cast<std::size_t>(face[j])];
    }
    s += '}';
    return s;
}

/**
 * An abstract simplicial complex given by its maximal faces.
 *
 * Kept in canonical form: every facet is a strictly increasing vertex-id
 * list, the facet list is sorted, and no facet contains another.  The empty
 * complex (no vertices, no facets) is allowed — it shows up as the order
 * complex of a rank-1 lattice.
 */
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<int>> facets;

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }

    /// Dimension = max facet cardinality - 1; -1 for the empty complex.
    int dim() const {
        int d = -1;
        for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool pure() const {
        for (const auto& f : facets)
            if (static_cast<int>(f.size()) - 1 != dim()) return false;
        return true;
    }

    /**
     * Validate and canonicalize: ids in range, no empty facet, every vertex
     * used.  Duplicate and dominated facets are dropped (establishing the
     * maximality invariant); vertex ids inside a facet are deduplicated.
     */
    static SimplicialComplex from_facets(std::vector<std::string> vertex_labels,
                                         std::vector<std::vector<int>> raw_facets) {
        const int nv = static_cast<int>(vertex_labels.size());
        for (auto& f : raw_facets) {
            if (f.empty()) throw PreconditionViolated("empty facet in simplicial complex");
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int v : f)
                if (v < 0 || v >= nv)
                    throw PreconditionViolated("facet vertex id " + std::to_string(v) +
                                               " out of range");
        }
        std::sort(raw_facets.begin(), raw_facets.end());
        raw_facets.erase(std::unique(raw_facets.begin(), raw_facets.end()), raw_facets.end());
        std::vector<std::vector<int>> kept;
        for (const auto& f : raw_facets) {
            bool dominated = false;
            for (const auto& g : raw_facets) {
                if (&f == &g || g.size() <= f.size()) continue;
                if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(f);
        }
        std::vector<char> used(static_cast<std::size_t>(nv), 0);
        for (const auto& f : kept)
            for (int v : f) used[static_cast<std::size_t>(v)] = 1;
        for (int v = 0; v < nv; ++v)
            if (!used[static_cast<std::size_t>(v)])
                throw PreconditionViolated("vertex '" + vertex_labels[static_cast<std::size_t>(v)] +
                                           "' appears in no facet");
        return SimplicialComplex{std::move(vertex_labels), std::move(kept)};
    }

    /// All distinct k-faces, sorted lexicographically.
    std::vector<std::vector<int>> faces_of_dim(int k) const {
        std::set<std::vector<int>> out;
        if (k < 0) return {};
        const auto want = static_cast<std::size_t>(k) + 1;
        std::vector<int> pick;
        for (const auto& f : facets) {
            if (f.size() < want) continue;
            // enumerate all (k+1)-subsets of this facet
            pick.assign(want, 0);
            for (std::size_t j = 0; j < want; ++j) pick[j] = static_cast<int>(j);
            while (true) {
                std::vector<int> face(want);
                for (std::size_t j = 0; j < want; ++j)
                    face[j] = f[static_cast<std::size_t>(pick[j])];
                out.insert(std::move(face));
                // next combination
                int j = static_cast<int>(want) - 1;
                while (j >= 0 &&
                       pick[static_cast<std::size_t>(j)] ==
                           static_cast<int>(f.size() - want + static_cast<std::size_t>(j)))
                    --j;
                if (j < 0) break;
                ++pick[static_cast<std::size_t>(j)];
                for (std::size_t t = static_cast<std::size_t>(j) + 1; t < want; ++t)
                    pick[t] = pick[t - 1] + 1;
            }
        }
        return {out.begin(), out.end()};
    }

    /// Face counts f_0..f_dim.
    FVector f_vector() const {
        std::vector<long long> c;
        for (int k = 0; k <= dim(); ++k)
            c.push_back(static_cast<long long>(faces_of_dim(k).size()));
        return FVector(std::move(c));
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

} // namespace polyface
