#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "simplicial_complex.hpp"

namespace polyface {

/**
 * The Boolean lattice B^n — all subsets of an n-set ordered by inclusion,
 * rank = cardinality.  As a face lattice this is the d-simplex with
 * n = d+1: bottom is the empty face, top the simplex itself.
 *
 * Built directly on bitmask keys rather than through a simplicial complex:
 * the complex route would bolt an artificial top above the full simplex and
 * produce rank n+1, which is not B^n.
 */
inline GradedLattice boolean_lattice(int n) {
    if (n < 0) throw PreconditionViolated("boolean_lattice needs n >= 0");
    if (n > 62 || (std::size_t{1} << n) > size_limit())
        throw SizeLimit("boolean_lattice(" + std::to_string(n) + ") exceeds the size limit");
    std::vector<std::string> vlabels;
    for (int v = 0; v < n; ++v) vlabels.push_back(std::to_string(v));
    std::vector<ProtoElement> pe;
    std::vector<std::pair<long long, long long>> cov;
    const long long full = (1LL << n) - 1;
    for (long long mask = 0; mask <= full; ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        pe.push_back({mask, static_cast<int>(members.size()), face_label(members, vlabels)});
        for (int v = 0; v < n; ++v)
            if (!(mask >> v & 1)) cov.emplace_back(mask, mask | (1LL << v));
    }
    return GradedLattice::build_from_covers(pe, cov);
}

/**
 * The simplicial (i-1)-sphere T^i_m = ∂Δ^m * ∂Δ^{i-m}: the join of two
 * simplex boundaries on disjoint vertex sets P (size m+1) and N (size
 * i+1-m).  Faces are exactly the vertex sets containing neither P nor N in
 * full, so the facets are (P minus one vertex) ∪ (N minus one vertex) and
 * there are (m+1)(i+1-m) of them, each with i vertices.
 */
inline SimplicialComplex tdm_simplicial(int i, int m) {
    if (m < 1 || 2 * m > i)
        throw PreconditionViolated("tdm_simplicial needs 1 <= m <= i/2, got i=" +
                                   std::to_string(i) + " m=" + std::to_string(m));
    std::vector<std::string> vlabels;
    const int np = m + 1, nn = i + 1 - m;
    for (int a = 0; a < np; ++a) vlabels.push_back("p" + std::to_string(a));
    for (int b = 0; b < nn; ++b) vlabels.push_back("n" + std::to_string(b));
    std::vector<std::vector<int>> facets;
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nn; ++b) {
            std::vector<int> f;
            for (int v = 0; v < np; ++v)
                if (v != a) f.push_back(v);
            for (int v = 0; v < nn; ++v)
                if (v != b) f.push_back(np + v);
            facets.push_back(std::move(f));
        }
    return SimplicialComplex::from_facets(std::move(vlabels), std::move(facets));
}

/**
 * Face lattice of a complex: all faces ordered by inclusion, below an
 * artificial top and above the empty face.  The rank of a face is its
 * cardinality, the top sits one above the facets — so a non-pure complex
 * fails the gradedness check, which is the honest outcome.
 */
inline GradedLattice face_lattice_from_complex(const SimplicialComplex& C) {
    std::vector<ProtoElement> pe;
    std::vector<std::pair<long long, long long>> cov;
    pe.push_back({0, 0, "{}"});
    std::map<std::vector<int>, long long> key_of;
    long long next = 1;
    for (int k = 0; k <= C.dim(); ++k)
        for (auto& face : C.faces_of_dim(k)) {
            key_of.emplace(face, next);
            pe.push_back({next, k + 1, face_label(face, C.vertex_labels)});
            ++next;
        }
    const long long top = next;
    pe.push_back({top, C.dim() + 2, "<top>"});
    for (const auto& [face, key] : key_of) {
        if (face.size() == 1) {
            cov.emplace_back(0, key);
            continue;
        }
        std::vector<int> sub(face.begin(), face.end() - 1);
        for (std::size_t drop = face.size(); drop-- > 0;) {
            // sub = face minus face[drop]; maintained incrementally
            if (drop + 1 < face.size()) sub[drop] = face[drop + 1];
            cov.emplace_back(key_of.at(sub), key);
        }
    }
    for (const auto& f : C.facets) cov.emplace_back(key_of.at(f), top);
    if (C.facets.empty()) cov.emplace_back(0, top);
    return GradedLattice::build_from_covers(pe, cov);
}

/// Pyramid applied `times` times.
inline GradedLattice multi_pyramid(GradedLattice L, int times) {
    if (times < 0) throw PreconditionViolated("multi_pyramid needs times >= 0");
    for (int t = 0; t < times; ++t) L = pyramid(L);
    return L;
}

/**
 * T^{d,d-i}_m: the (d-i)-fold pyramid over T^i_m.  The d-polytopes with
 * d+2 vertices are exactly these (for 2 <= i <= d, 1 <= m <= i/2).
 */
inline GradedLattice tdm_lattice(int d, int i, int m) {
    if (i < 2 || i > d)
        throw PreconditionViolated("tdm_lattice needs 2 <= i <= d, got d=" + std::to_string(d) +
                                   " i=" + std::to_string(i));
    return multi_pyramid(face_lattice_from_complex(tdm_simplicial(i, m)), d - i);
}

/**
 * Face lattice of the product polytope P x Q from the factors' face
 * lattices: proper and improper faces are the products F x G of nonempty
 * faces, so the elements are the pairs (x, y) with both coordinates above
 * the factor bottoms, plus a fresh empty face.  rank(x,y) = rank(x) +
 * rank(y) - 1.
 */
inline GradedLattice product_polytope_lattice(const GradedLattice& A, const GradedLattice& B) {
    if (A.rank() < 1 || B.rank() < 1)
        throw PreconditionViolated("product factors must have at least one atom each");
    std::vector<ProtoElement> pe;
    std::vector<std::pair<long long, long long>> cov;
    pe.push_back({-1, 0, "{}"});
    auto key = [&](int x, int y) { return static_cast<long long>(x) * B.size() + y; };
    for (int x = 1; x < A.size(); ++x)
        for (int y = 1; y < B.size(); ++y) {
            pe.push_back({key(x, y), A.element_rank(x) + B.element_rank(y) - 1,
                          "(" + A.label(x) + "," + B.label(y) + ")"});
            for (int xc : A.upper_covers(x)) cov.emplace_back(key(x, y), key(xc, y));
            for (int yc : B.upper_covers(y)) cov.emplace_back(key(x, y), key(x, yc));
        }
    for (int a : A.atoms())
        for (int b : B.atoms()) cov.emplace_back(-1, key(a, b));
    return GradedLattice::build_from_covers(pe, cov);
}

/// Prism over the (s-1)-simplex: the product of a segment with Δ^{s-1}.
inline GradedLattice prism_lattice(int s) {
    if (s < 1) throw PreconditionViolated("prism_lattice needs s >= 1");
    return product_polytope_lattice(boolean_lattice(2), boolean_lattice(s));
}

/**
 * The minimizer family Pyr^{d-s}(Δ^1 x Δ^{s-1}): the (d-s)-fold pyramid
 * over the prism, the unique-up-to-isomorphism d-polytope with d+s
 * vertices and componentwise-minimal f-vector.
 */
inline GradedLattice grunbaum_minimizer(int d, int s) {
    if (s < 2 || s > d)
        throw PreconditionViolated("grunbaum_minimizer needs 2 <= s <= d, got d=" +
                                   std::to_string(d) + " s=" + std::to_string(s));
    return multi_pyramid(prism_lattice(s), d - s);
}

/// Coatoms F whose lower interval [0̂, F] is Boolean, i.e. simplex facets.
inline std::vector<int> simplex_facets(const GradedLattice& L) {
    std::vector<int> out;
    for (int f : L.coatoms())
        if (is_boolean(interval(L, L.bottom(), f).lattice)) out.push_back(f);
    return out;
}

/**
 * The simplex facet whose sorted vertex-label list is lexicographically
 * smallest — the deterministic choice used by repeated stacking.
 */
inline int lex_smallest_simplex_facet(const GradedLattice& L) {
    int best = -1;
    std::vector<std::string> best_key;
    for (int f : simplex_facets(L)) {
        std::vector<std::string> key;
        for (int a : L.atoms_below(f)) key.push_back(L.label(a));
        std::sort(key.begin(), key.end());
        if (best < 0 || key < best_key) {
            best = f;
            best_key = std::move(key);
        }
    }
    if (best < 0) throw FacetNotSimplex("lattice has no simplex facet to stack over");
    return best;
}

/**
 * Combinatorial stacking: erect a shallow pyramid with apex w over the
 * simplex facet F.  F disappears as a face; every proper face G < F gains a
 * cone w*G (for G = 0̂ that is the vertex w itself), and the cones over the
 * ridges below F become the new facets.  Throws FacetNotSimplex unless
 * [0̂, F] is Boolean.
 */
inline GradedLattice stack_over_facet(const GradedLattice& L, int F) {
    if (L.element_rank(F) != L.rank() - 1)
        throw PreconditionViolated("stack_over_facet: element " + std::to_string(F) +
                                   " is not a coatom");
    if (!is_boolean(interval(L, L.bottom(), F).lattice))
        throw FacetNotSimplex("facet '" + L.label(F) + "' is not a simplex");
    const std::string apex = "w" + std::to_string(L.atoms().size() + 1);
    std::vector<ProtoElement> pe;
    std::vector<std::pair<long long, long long>> cov;
    for (int x = 0; x < L.size(); ++x)
        if (x != F) pe.push_back({2LL * x, L.element_rank(x), L.label(x)});
    L.down_set(F).for_each([&](int g) {
        if (g == F) return;
        pe.push_back({2LL * g + 1, L.element_rank(g) + 1,
                      g == L.bottom() ? apex : L.label(g) + "+" + apex});
        cov.emplace_back(2LL * g, 2LL * g + 1);
        if (L.element_rank(g) == L.element_rank(F) - 1) cov.emplace_back(2LL * g + 1, 2LL * L.top());
    });
    for (auto [lo, hi] : L.cover_pairs()) {
        if (lo != F && hi != F) cov.emplace_back(2LL * lo, 2LL * hi);
        if (hi != F && L.leq(hi, F)) cov.emplace_back(2LL * lo + 1, 2LL * hi + 1);
    }
    return GradedLattice::build_from_covers(pe, cov);
}

/**
 * Stack(n, d): the d-simplex stacked n-d-1 times, each time over the
 * lexicographically smallest simplex facet.  Stack(d+3, d) is the stacked
 * polytope with d+3 vertices the bound machinery compares against.
 */
inline GradedLattice stacked_polytope(int d, int n) {
    if (d < 1 || n < d + 1)
        throw PreconditionViolated("stacked_polytope needs d >= 1 and n >= d+1");
    GradedLattice L = boolean_lattice(d + 1);
    for (int t = 0; t < n - d - 1; ++t) L = stack_over_facet(L, lex_smallest_simplex_facet(L));
    return L;
}

/**
 * ∇(d) = (Stack(T^{d,d-2}_1))^*: stack the (d-2)-fold pyramid over the
 * square over a simplex facet, then dualize.  A simple d-polytope with
 * 2d+1 vertices and d+3 facets.
 */
inline GradedLattice nabla(int d) {
    if (d < 2) throw PreconditionViolated("nabla needs d >= 2");
    GradedLattice L = tdm_lattice(d, 2, 1);
    return dual(stack_over_facet(L, lex_smallest_simplex_facet(L)));
}

} // namespace polyface
