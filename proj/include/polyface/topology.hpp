#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "simplicial_complex.hpp"

namespace polyface {

/**
 * Order complex of a graded lattice: vertices are the proper elements
 * (everything except bottom and top), facets are the maximal chains.  In a
 * graded bounded lattice every maximal chain meets every proper rank, so the
 * result is automatically pure of dimension rank - 2.
 *
 * Vertices carry the lattice labels when those are unique and nonempty;
 * otherwise they fall back to "e<id>" so the complex stays well formed.
 */
inline SimplicialComplex order_complex(const GradedLattice& L) {
    SimplicialComplex T;
    const int n = L.size();
    if (n <= 2) return T;  // no proper elements
    bool labels_usable = true;
    {
        std::set<std::string> seen;
        for (int x = 1; x <= n - 2 && labels_usable; ++x)
            if (L.label(x).empty() || !seen.insert(L.label(x)).second) labels_usable = false;
    }
    T.vertex_labels.reserve(static_cast<std::size_t>(n) - 2);
    for (int x = 1; x <= n - 2; ++x)
        T.vertex_labels.push_back(labels_usable ? L.label(x) : "e" + std::to_string(x));

    const int coatom_rank = L.rank() - 1;
    std::vector<int> chain;
    auto ascend = [&](auto&& self, int x) -> void {
        chain.push_back(x - 1);  // proper element x <-> vertex x - 1
        if (L.element_rank(x) == coatom_rank)
            T.facets.push_back(chain);
        else
            for (int y : L.upper_covers(x)) self(self, y);
        chain.pop_back();
    };
    for (int a : L.atoms()) ascend(ascend, a);
    // chains ascend ranks, hence canonical ids: each facet is already sorted,
    // and distinct maximal chains of equal length never contain one another
    std::sort(T.facets.begin(), T.facets.end());
    return T;
}

/// GF(2) Betti numbers b_0..b_dim of a complex.
struct HomologyProfile {
    std::vector<long long> betti;

    long long at(int i) const {
        if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
        return betti[static_cast<std::size_t>(i)];
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < betti.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(betti[i]);
        }
        return s + ")";
    }

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

namespace detail {

/// Boundary matrix rank from dimension k to k-1 (k >= 1), over GF(2).
inline std::size_t boundary_rank(const std::vector<std::vector<int>>& upper,
                                 const std::vector<std::vector<int>>& lower) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
    std::vector<Bitset> rows;
    rows.reserve(upper.size());
    std::vector<int> sub;
    for (const auto& f : upper) {
        Bitset row(lower.size());
        sub.assign(f.begin() + 1, f.end());
        for (std::size_t drop = 0;; ++drop) {
            row.set(static_cast<std::size_t>(index.at(sub)));
            if (drop + 1 == f.size()) break;
            sub[drop] = f[drop];
        }
        rows.push_back(std::move(row));
    }
    return gf2_rank(std::move(rows), lower.size());
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace detail

/**
 * Betti numbers over GF(2) from boundary matrix ranks:
 * b_k = n_k - rank d_k - rank d_{k+1}, with rank d_0 = 0.
 *
 * Every invocation re-derives the Euler characteristic from the Betti
 * numbers and compares it against the alternating face-count sum; a mismatch
 * means the rank computation itself is broken and raises Error.
 */
inline HomologyProfile gf2_homology(const SimplicialComplex& C) {
    HomologyProfile H;
    const int d = C.dim();
    if (d < 0) return H;
    std::vector<std::vector<std::vector<int>>> faces(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) faces[static_cast<std::size_t>(k)] = C.faces_of_dim(k);
    std::vector<std::size_t> brank(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k)
        brank[static_cast<std::size_t>(k)] =
            detail::boundary_rank(faces[static_cast<std::size_t>(k)],
                                  faces[static_cast<std::size_t>(k) - 1]);
    long long euler_faces = 0, euler_betti = 0;
    for (int k = 0; k <= d; ++k) {
        const auto nk = static_cast<long long>(faces[static_cast<std::size_t>(k)].size());
        const long long bk = nk - static_cast<long long>(brank[static_cast<std::size_t>(k)]) -
                             static_cast<long long>(brank[static_cast<std::size_t>(k) + 1]);
        if (bk < 0) throw Error("negative Betti number b_" + std::to_string(k) +
                                " — boundary ranks are inconsistent");
        H.betti.push_back(bk);
        const long long sign = (k % 2 == 0) ? 1 : -1;
        euler_faces += sign * nk;
        euler_betti += sign * bk;
    }
    if (euler_faces != euler_betti)
        throw Error("Euler characteristic mismatch: faces give " + std::to_string(euler_faces) +
                    ", Betti numbers give " + std::to_string(euler_betti));
    return H;
}

/// Top Betti number alone (rank of the top boundary map only — no Euler pass).
inline long long top_gf2_betti(const SimplicialComplex& C) {
    const int d = C.dim();
    if (d < 0) return 0;
    auto top = C.faces_of_dim(d);
    if (d == 0) return static_cast<long long>(top.size());
    const auto r = detail::boundary_rank(top, C.faces_of_dim(d - 1));
    return static_cast<long long>(top.size()) - static_cast<long long>(r);
}

/// Total number of faces across all dimensions (the empty face not counted).
inline long long simplex_count(const SimplicialComplex& C) {
    long long total = 0;
    for (int k = 0; k <= C.dim(); ++k)
        total += static_cast<long long>(C.faces_of_dim(k).size());
    return total;
}

/// Every facet has the full dimension; witnesses are the short facets.
inline CheckReport is_pure(const SimplicialComplex& C) {
    CheckReport rep;
    rep.check = "pure";
    rep.set_param("dim", C.dim());
    rep.set_param("facets", static_cast<long long>(C.facets.size()));
    for (const auto& f : C.facets)
        if (static_cast<int>(f.size()) - 1 != C.dim()) rep.fail(face_label(f, C.vertex_labels));
    return rep;
}

/**
 * Connectivity through the 1-skeleton (each facet is a clique, so merging
 * consecutive facet vertices in a union-find gives the components).  On
 * failure one witness vertex per component is reported.
 */
inline CheckReport is_connected(const SimplicialComplex& C) {
    CheckReport rep;
    rep.check = "connected";
    if (C.vertex_count() == 0) {
        rep.note("empty complex");
        return rep;
    }
    detail::UnionFind uf(C.vertex_count());
    for (const auto& f : C.facets)
        for (std::size_t j = 1; j < f.size(); ++j) uf.unite(f[0], f[j]);
    std::map<int, int> root_rep;  // component root -> smallest member
    for (int v = 0; v < C.vertex_count(); ++v) root_rep.emplace(uf.find(v), v);
    rep.set_param("components", static_cast<long long>(root_rep.size()));
    if (root_rep.size() > 1)
        for (const auto& [root, v] : root_rep)
            rep.fail(C.vertex_labels[static_cast<std::size_t>(v)]);
    return rep;
}

/**
 * Closed pseudomanifold test for a pure complex: every ridge (codimension-1
 * face) lies in exactly two facets.  Witnesses name the offending ridges with
 * their facet counts; a non-pure complex fails outright.
 */
inline CheckReport is_pseudomanifold(const SimplicialComplex& C) {
    CheckReport rep;
    rep.check = "pseudomanifold";
    const int d = C.dim();
    rep.set_param("dim", d);
    if (d < 0) {
        rep.note("empty complex");
        return rep;
    }
    if (!C.pure()) {
        rep.fail("complex is not pure");
        return rep;
    }
    if (d == 0) {
        // ridges degenerate to the empty face; the closed 0-pseudomanifold is
        // a point pair
        if (C.vertex_count() != 2)
            rep.fail("0-dimensional complex with " + std::to_string(C.vertex_count()) +
                     " vertices");
        return rep;
    }
    std::map<std::vector<int>, int> ridge_count;
    std::vector<int> sub;
    for (const auto& f : C.facets) {
        sub.assign(f.begin() + 1, f.end());
        for (std::size_t drop = 0;; ++drop) {
            ++ridge_count[sub];
            if (drop + 1 == f.size()) break;
            sub[drop] = f[drop];
        }
    }
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2)
            rep.fail(face_label(ridge, C.vertex_labels) + " in " + std::to_string(count) +
                     " facet(s)");
    return rep;
}

/**
 * Lattice form of the same test, straight off the grading: every element of
 * rank rank()-2 must sit below exactly two coatoms.
 */
inline CheckReport is_pseudomanifold(const GradedLattice& L) {
    CheckReport rep;
    rep.check = "pseudomanifold";
    rep.set_param("d", L.rank() - 1);
    if (L.rank() < 2) {
        rep.note("rank below 2: no ridge level");
        return rep;
    }
    for (int x : L.elements_of_rank(L.rank() - 2)) {
        const auto above =
            Bitset::and_count(L.up_set(x), L.rank_mask(L.rank() - 1));
        if (above != 2)
            rep.fail(L.label(x) + " below " + std::to_string(above) + " facet(s)");
    }
    return rep;
}

/**
 * Link of a face: all faces disjoint from `face` whose union with it is again
 * a face.  Its facets are exactly {F \ face : F a facet containing face}, so
 * the result needs no maximality pruning.  Throws FaceNotInComplex when the
 * input is not a face of C.  The link of the empty face is C itself; the
 * link of a facet is the empty complex.
 */
inline SimplicialComplex link(const SimplicialComplex& C, std::vector<int> face) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    for (int v : face)
        if (v < 0 || v >= C.vertex_count())
            throw FaceNotInComplex("vertex id " + std::to_string(v) + " out of range");
    if (face.empty()) return C;
    std::vector<std::vector<int>> remainders;
    bool present = false;
    for (const auto& f : C.facets) {
        if (!std::includes(f.begin(), f.end(), face.begin(), face.end())) continue;
        present = true;
        std::vector<int> rem;
        std::set_difference(f.begin(), f.end(), face.begin(), face.end(),
                            std::back_inserter(rem));
        if (!rem.empty()) remainders.push_back(std::move(rem));
    }
    if (!present)
        throw FaceNotInComplex(face_label(face, C.vertex_labels) + " is not a face");
    SimplicialComplex lk;
    if (remainders.empty()) return lk;  // link of a facet
    std::vector<int> used;
    for (const auto& f : remainders) used.insert(used.end(), f.begin(), f.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<int> new_id(static_cast<std::size_t>(C.vertex_count()), -1);
    for (std::size_t j = 0; j < used.size(); ++j) {
        new_id[static_cast<std::size_t>(used[j])] = static_cast<int>(j);
        lk.vertex_labels.push_back(C.vertex_labels[static_cast<std::size_t>(used[j])]);
    }
    for (auto& f : remainders)
        for (int& v : f) v = new_id[static_cast<std::size_t>(v)];
    std::sort(remainders.begin(), remainders.end());
    lk.facets = std::move(remainders);
    return lk;
}

/**
 * Normal pseudomanifold check, all conditions gathered into one report:
 *   (a) connected,
 *   (b) closed pseudomanifold,
 *   (c) top GF(2) Betti number 1,
 *   (d) the link of every face of codimension >= 2 is connected.
 * On complexes of at most 5000 total simplices that pass (a)-(d), the
 * homological reading is cross-checked as well: every vertex link must have
 * top Betti number 1 (a vertex pair in the curve case).
 *
 * Link connectivity is computed without materializing links: per-vertex
 * facet-membership bitsets are intersected to find the facets containing a
 * face, and the link components come from a union-find over those facets
 * with the face removed.
 */
inline CheckReport is_normal_pseudomanifold(const SimplicialComplex& C) {
    CheckReport rep;
    rep.check = "normal-pseudomanifold";
    const int d = C.dim();
    rep.set_param("dim", d);
    if (d < 0) {
        rep.note("empty complex");
        return rep;
    }

    const CheckReport conn = is_connected(C);
    if (!conn.passed) rep.fail("complex has " + conn.params.at("components") + " components");

    const CheckReport pm = is_pseudomanifold(C);
    if (!pm.passed) {
        for (const auto& w : pm.witnesses) rep.fail(w);
        rep.note("pseudomanifold condition fails");
    }

    const long long top = top_gf2_betti(C);
    rep.set_param("top_betti", top);
    if (top != 1) rep.fail("top Betti number is " + std::to_string(top));

    // (d): links of faces of dimension <= d-2
    const std::size_t nf = C.facets.size();
    std::vector<Bitset> in_facet(static_cast<std::size_t>(C.vertex_count()), Bitset(nf));
    for (std::size_t fi = 0; fi < nf; ++fi)
        for (int v : C.facets[fi]) in_facet[static_cast<std::size_t>(v)].set(fi);

    std::vector<char> seen(static_cast<std::size_t>(C.vertex_count()), 0);
    long long links_checked = 0;
    auto link_components = [&](const std::vector<int>& face, const Bitset& common) {
        detail::UnionFind uf(C.vertex_count());
        std::vector<int> verts;
        common.for_each([&](int fi) {
            int prev = -1;
            for (int v : C.facets[static_cast<std::size_t>(fi)]) {
                if (std::binary_search(face.begin(), face.end(), v)) continue;
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    verts.push_back(v);
                }
                if (prev >= 0) uf.unite(prev, v);
                prev = v;
            }
        });
        std::set<int> roots;
        for (int v : verts) {
            roots.insert(uf.find(v));
            seen[static_cast<std::size_t>(v)] = 0;
        }
        return roots.size();
    };
    for (int k = 0; k <= d - 2; ++k) {
        for (const auto& face : C.faces_of_dim(k)) {
            Bitset common = in_facet[static_cast<std::size_t>(face[0])];
            for (std::size_t j = 1; j < face.size(); ++j)
                common &= in_facet[static_cast<std::size_t>(face[j])];
            ++links_checked;
            if (link_components(face, common) > 1)
                rep.fail("disconnected link of " + face_label(face, C.vertex_labels));
        }
    }
    rep.note(std::to_string(links_checked) + " link(s) of codimension >= 2 checked");

    if (rep.passed && d >= 1) {
        const long long total = simplex_count(C);
        if (total <= 5000) {
            long long cross = 0;
            for (int v = 0; v < C.vertex_count(); ++v) {
                const SimplicialComplex lk = link(C, {v});
                const long long tb = top_gf2_betti(lk);
                const long long expected = lk.dim() >= 1 ? 1 : 2;
                ++cross;
                if (tb != expected)
                    rep.fail("vertex link of " + C.vertex_labels[static_cast<std::size_t>(v)] +
                             " has top Betti number " + std::to_string(tb));
            }
            rep.note("vertex-link Betti cross-check on " + std::to_string(cross) + " link(s)");
        } else {
            rep.note("vertex-link Betti cross-check skipped (" + std::to_string(total) +
                     " simplices)");
        }
    }
    return rep;
}

/// Same check applied to the order complex of a lattice.
inline CheckReport is_normal_pseudomanifold(const GradedLattice& L) {
    CheckReport rep = is_normal_pseudomanifold(order_complex(L));
    rep.set_param("d", L.rank() - 1);
    return rep;
}

} // namespace polyface
