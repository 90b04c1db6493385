#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "simplicial_complex.hpp"
#include "spec_dsl.hpp"
#include "topology.hpp"

namespace polyface {

namespace detail {

/// Maximal proper chains of L as sorted label lists — the id-free fingerprint
/// used to compare a lattice's order complex with its dual's.
inline std::vector<std::vector<std::string>> chain_label_sets(const GradedLattice& L) {
    std::vector<std::vector<std::string>> out;
    if (L.size() <= 2) return out;
    const int coatom_rank = L.rank() - 1;
    std::vector<std::string> chain;
    auto ascend = [&](auto&& self, int x) -> void {
        chain.push_back(L.label(x));
        if (L.element_rank(x) == coatom_rank) {
            auto sorted = chain;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
        } else {
            for (int y : L.upper_covers(x)) self(self, y);
        }
        chain.pop_back();
    };
    for (int a : L.atoms()) ascend(ascend, a);
    std::sort(out.begin(), out.end());
    return out;
}

/// Coatom support of x, as indices into L.coatoms().
inline std::vector<int> coatom_support(const GradedLattice& L, int x) {
    const auto& co = L.coatoms();
    std::vector<int> s;
    for (std::size_t j = 0; j < co.size(); ++j)
        if (L.leq(x, co[j])) s.push_back(static_cast<int>(j));
    return s;
}

} // namespace detail

/**
 * Tests the simplicial-dual hypothesis and, when it holds, materializes the
 * dual as an explicit complex and confirms it behaves like one.
 *
 * Hypothesis: every proper upper interval [x, 1] is Boolean (the lattice of
 * a simple polytope).  When it holds:
 *  - the coatom supports of all elements with Boolean upper interval — the
 *    bottom included exactly when the whole lattice is Boolean — are
 *    collected as the faces of the dual complex;
 *  - pairwise distinctness and downward closure of the support family are
 *    verified, and the support sizes are matched against the rank counts of
 *    the dual lattice (with the one extra full face in the Boolean case);
 *  - the order complexes of the lattice and its dual are compared as
 *    label-identified abstract complexes (barycentric invariance).
 */
inline CheckReport check_dual_simplicial(const GradedLattice& L) {
    CheckReport rep;
    rep.check = "dual-simplicial";
    rep.set_param("d", L.rank() - 1);
    const int n = L.size();
    if (n <= 2) {
        rep.note("no proper elements");
        return rep;
    }

    for (int x = 1; x < n - 1; ++x)
        if (!is_boolean(interval(L, x, L.top()).lattice)) rep.fail(L.label(x));
    if (!rep.passed) {
        rep.note("hypothesis fails: listed elements have non-Boolean upper intervals");
        return rep;
    }
    rep.note("all proper upper intervals are Boolean");

    // faces of the dual complex
    std::vector<std::vector<int>> supports;
    for (int x = 0; x < n - 1; ++x) {
        if (x == L.bottom() && !is_boolean(L)) continue;
        supports.push_back(detail::coatom_support(L, x));
    }
    {
        auto sorted = supports;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            rep.fail("two elements share a coatom support");
            return rep;
        }
    }
    std::vector<std::string> coatom_labels;
    for (int c : L.coatoms()) coatom_labels.push_back(L.label(c));
    const SimplicialComplex dual_cx = SimplicialComplex::from_facets(coatom_labels, supports);
    rep.set_param("dual_facets", static_cast<long long>(dual_cx.facets.size()));
    rep.set_param("dual_dim", dual_cx.dim());

    // the simplicial closure of the supports must reproduce the supports:
    // face counts by size against the materialized family and against the
    // rank counts of the dual lattice
    std::vector<long long> by_size(static_cast<std::size_t>(dual_cx.dim()) + 2, 0);
    for (const auto& s : supports) ++by_size[s.size()];
    const FVector closure = dual_cx.f_vector();
    const FVector dual_f = dual(L).f_vector();
    for (int k = 0; k <= dual_cx.dim(); ++k) {
        const long long have = closure.counts[static_cast<std::size_t>(k)];
        const long long listed = by_size[static_cast<std::size_t>(k) + 1];
        // raw rank counts of the dual lattice — at() would report the
        // improper top as 1 and collide with the explicit full face below
        long long expected = k < dual_f.dim() ? dual_f.counts[static_cast<std::size_t>(k)] : 0;
        if (is_boolean(L) && k == dual_cx.dim()) expected += 1;  // the full face
        if (have != listed)
            rep.fail("closure has " + std::to_string(have) + " faces of dimension " +
                     std::to_string(k) + " but only " + std::to_string(listed) +
                     " are coatom supports");
        else if (have != expected)
            rep.fail("dual complex has " + std::to_string(have) + " faces of dimension " +
                     std::to_string(k) + ", dual lattice has " + std::to_string(expected) +
                     " elements of that rank");
    }

    if (detail::chain_label_sets(L) != detail::chain_label_sets(dual(L)))
        rep.fail("order complexes of the lattice and its dual differ");
    else
        rep.note("order complex agrees with the dual's");
    return rep;
}

/**
 * Structure identification for lattices with exactly d+2 coatoms.
 *
 * Pipeline: strip pyramid apexes (an atom below all coatoms but one, each
 * strip validated by the pyramid face-count recursion), demand every proper
 * upper interval of the core be Boolean, materialize the core's dual
 * complex, and read off its minimal non-faces.  Exactly two of them must
 * partition the vertex set into parts of size >= 2 — the join-of-two-
 * boundaries shape — which pins the parameters (i, m).  The identification
 * is certified by rebuilding the named model and comparing face counts.
 *
 * Lattices whose coatom count is not d+2 are reported out of scope rather
 * than failed.
 */
inline CheckReport check_d_plus_2_facets_polytopal(const GradedLattice& L) {
    CheckReport rep;
    rep.check = "d-plus-2-facets";
    const int d = L.rank() - 1;
    rep.set_param("d", d);
    rep.set_param("facets", static_cast<long long>(L.coatoms().size()));
    if (static_cast<int>(L.coatoms().size()) != d + 2) {
        rep.note("out of scope: " + std::to_string(L.coatoms().size()) + " facets where d+2=" +
                 std::to_string(d + 2));
        return rep;
    }
    if (d < 2) {
        rep.note("out of scope: d < 2");
        return rep;
    }

    // peel pyramid apexes
    GradedLattice M = L;
    int peeled = 0;
    for (;;) {
        int apex = -1, base = -1;
        for (int a : M.atoms()) {
            int missing = 0, miss = -1;
            for (int c : M.coatoms())
                if (!M.leq(a, c)) {
                    ++missing;
                    miss = c;
                }
            if (missing == 1) {
                apex = a;
                base = miss;
                break;
            }
        }
        if (apex < 0) break;
        const GradedLattice B = interval(M, M.bottom(), base).lattice;
        const FVector fm = M.f_vector(), fb = B.f_vector();
        for (int k = 0; k <= fm.dim(); ++k)
            if (fm.at(k) != fb.at(k) + fb.at(k - 1)) {
                rep.fail("apex " + M.label(apex) +
                         " does not satisfy the pyramid face-count recursion");
                return rep;
            }
        M = B;
        ++peeled;
    }
    rep.set_param("peeled", peeled);
    const int dc = M.rank() - 1;
    if (dc < 2) {
        rep.fail("core collapsed to d=" + std::to_string(dc));
        return rep;
    }
    if (static_cast<int>(M.coatoms().size()) != dc + 2) {
        rep.fail("core has " + std::to_string(M.coatoms().size()) + " facets where d+2=" +
                 std::to_string(dc + 2));
        return rep;
    }

    for (int x = 1; x < M.size() - 1; ++x)
        if (!is_boolean(interval(M, x, M.top()).lattice)) {
            rep.fail("core element " + M.label(x) + " has a non-Boolean upper interval");
            return rep;
        }

    // dual complex of the core as vertex-set bitmasks over its coatoms
    const int v = dc + 2;
    if (v > 24)
        throw SizeLimit("minimal non-face scan over 2^" + std::to_string(v) + " subsets");
    std::set<std::uint32_t> face_masks;
    for (int x = 1; x < M.size() - 1; ++x) {
        std::uint32_t mask = 0;
        for (int j : detail::coatom_support(M, x)) mask |= std::uint32_t{1} << j;
        face_masks.insert(mask);
    }
    const std::uint32_t full = (std::uint32_t{1} << v) - 1;
    std::vector<std::uint32_t> min_nonfaces;
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (face_masks.count(s)) continue;
        bool minimal = true;
        for (int b = 0; b < v && minimal; ++b)
            if ((s >> b) & 1) {
                const std::uint32_t t = s & ~(std::uint32_t{1} << b);
                if (t != 0 && !face_masks.count(t)) minimal = false;
            }
        if (minimal) min_nonfaces.push_back(s);
    }
    std::vector<std::string> core_coatom_labels;
    for (int c : M.coatoms()) core_coatom_labels.push_back(M.label(c));
    auto render = [&](std::uint32_t mask) {
        std::vector<int> ids;
        for (int b = 0; b < v; ++b)
            if ((mask >> b) & 1) ids.push_back(b);
        return face_label(ids, core_coatom_labels);
    };
    if (min_nonfaces.size() != 2 || (min_nonfaces[0] & min_nonfaces[1]) != 0 ||
        (min_nonfaces[0] | min_nonfaces[1]) != full) {
        rep.fail("minimal non-faces do not form a two-part vertex partition");
        for (std::uint32_t s : min_nonfaces) rep.fail(render(s));
        return rep;
    }
    const int p = std::popcount(min_nonfaces[0]);
    const int q = std::popcount(min_nonfaces[1]);
    const int m = std::min(p, q) - 1;
    const int i = dc;
    // with the partition in hand the face family must be exactly the sets
    // containing neither part
    for (std::uint32_t s = 1; s <= full; ++s) {
        const bool should = (s & min_nonfaces[0]) != min_nonfaces[0] &&
                            (s & min_nonfaces[1]) != min_nonfaces[1];
        if (should != (face_masks.count(s) > 0)) {
            rep.fail("support family differs from the two-part model at " + render(s));
            return rep;
        }
    }
    rep.set_param("i", i);
    rep.set_param("m", m);

    std::string model = "dual(tdm(" + std::to_string(i) + "," + std::to_string(i) + "," +
                        std::to_string(m) + "))";
    if (peeled > 0) model = "pyr(" + model + "," + std::to_string(peeled) + ")";
    if (L.f_vector() != realize(model).f_vector()) {
        rep.fail("face counts differ from the identified model " + model);
        return rep;
    }
    rep.note("identified as " + model);
    return rep;
}

} // namespace polyface
