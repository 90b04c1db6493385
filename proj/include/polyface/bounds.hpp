#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polyface/constructions.hpp"
#include "polyface/errors.hpp"
#include "polyface/lattice.hpp"
#include "polyface/numbers.hpp"
#include "polyface/report.hpp"

namespace polyface {

/**
 * Lower-bound function for d-polytopes with n >= d+1 vertices: every such
 * polytope has at least
 *
 *     phi(k, n, d) = C(d+1, k+1) + C(d, k+1) - C(d+1-s, k+1),   s = n - d,
 *
 * faces of dimension k.  At s = 1 this collapses to C(d+1, k+1), the simplex
 * count; the bound is attained for every k by the iterated pyramid over a
 * prism (grunbaum_minimizer).  Vanishing-convention binomials make the
 * expression total, so no range checking is done here.
 */
inline Integer phi(int k, long long n, int d) {
    const long long s = n - d;
    return binomial(d + 1, k + 1) + binomial(d, k + 1) - binomial(d + 1 - s, k + 1);
}

/**
 * Closed form for the face numbers of T^{d,d-i}_m, the (d-i)-fold pyramid
 * over the simplicial i-polytope with i+2 vertices and an (m-1)-sized
 * "missing face" pair:
 *
 *     f_k = C(d+2, d-k+1) - C(d-i+m+1, d-k+1) - C(d-m+1, d-k+1) + C(d-i+1, d-k+1).
 *
 * The formula extends to the improper faces: k = -1 and k = d both evaluate
 * to 1.  Specializations worth knowing: f_0 = d+2 for every (i, m), and
 * f_{d-1} = d + 1 + m(i-m), so the facet count depends on (i, m) only
 * through the product m(i-m).
 */
inline Integer fvec_tdm_formula(int d, int i, int m, int k) {
    const long long r = d - k + 1;
    return binomial(d + 2, r) - binomial(d - i + m + 1, r) - binomial(d - m + 1, r) +
           binomial(d - i + 1, r);
}

/// Parameter domain of the T^{d,d-i}_m family: 2 <= i <= d and 1 <= m <= i/2.
inline bool tdm_params_valid(int d, int i, int m) {
    return d >= 2 && i >= 2 && i <= d && m >= 1 && m <= i / 2;
}

/**
 * Vertex-count-(2d+1) lower bound in the few-facets regime (exactly d+2
 * facets):
 *
 *     A(m, d) = C(d+1, m+1) + C(d, m+1) + C(d-1, m+1)
 *               - C(ceil(d/2), m+1) - C(ceil(d/2)-1, m+1).
 */
inline Integer bound_A(int m, int d) {
    const long long c = (d + 1) / 2;
    return binomial(d + 1, m + 1) + binomial(d, m + 1) + binomial(d - 1, m + 1) -
           binomial(c, m + 1) - binomial(c - 1, m + 1);
}

/**
 * Vertex-count-(2d+1) lower bound in the many-facets regime (at least d+3
 * facets):
 *
 *     B(m, d) = C(d+1, m+1) + C(d, m+1) + C(d-1, m).
 *
 * B(m, d) equals f_m(nabla(d)), so the bound is attained for every m at
 * once by a single polytope.
 */
inline Integer bound_B(int m, int d) {
    return binomial(d + 1, m + 1) + binomial(d, m + 1) + binomial(d - 1, m);
}

/**
 * delta(m, d) = A(m, d) - B(m, d)
 *             = C(d-1, m+1) - C(d-1, m) - C(ceil(d/2), m+1) - C(ceil(d/2)-1, m+1).
 *
 * Nonnegative for 1 <= m < ceil(d/2) - 1 (so the d+2-facet bound A dominates
 * there), but it does go negative: delta(2, 6) = -1 already.  Satisfies a
 * Pascal-style recursion in d that verify_appendix checks exactly.
 */
inline Integer delta(int m, int d) {
    const long long c = (d + 1) / 2;
    return binomial(d - 1, m + 1) - binomial(d - 1, m) - binomial(c, m + 1) -
           binomial(c - 1, m + 1);
}

/**
 * Face numbers of the stacked d-polytope on n = d+3 vertices:
 *
 *     f_{d-1-m}(Stack) = C(d, m+1)(d+3) - C(d+1, m+1)(d-1-m),   m = d-1-j.
 *
 * Stated for n = d+3 and 0 <= j <= d-2 only; the facet count j = d-1 falls
 * outside the formula (stacking trades one facet for d at each step, so it
 * needs the step count, not this closed form).
 */
inline Integer stacked_lbt_fvector(int d, long long n, int j) {
    if (d < 2) throw PreconditionViolated("stacked_lbt_fvector needs d >= 2");
    if (n != d + 3)
        throw OutOfFormulaRange("stacked_lbt_fvector is stated for n = d+3 only, got n = " +
                                std::to_string(n) + " with d = " + std::to_string(d));
    if (j < 0 || j > d - 2)
        throw OutOfFormulaRange("stacked_lbt_fvector covers 0 <= j <= d-2; facets (j = d-1) "
                                "need a direct count");
    const long long m = d - 1 - j;
    return binomial(d, m + 1) * (d + 3) - binomial(d + 1, m + 1) * (d - 1 - m);
}

/**
 * Monotonicity of the T^{d,d-i}_m face numbers in each parameter, with the
 * exact strictness characterizations:
 *
 *   (i)  f_k(T^{d,d-i}_m) <= f_k(T^{d,d-i}_{m+1})  whenever (i, m+1) is valid;
 *        the gap is C(d-m, d-k) - C(d-i+m+1, d-k), strict iff m <= k.
 *   (ii) f_k(T^{d,d-i}_m) <= f_k(T^{d,d-i-1}_m)    whenever (i+1, m) is valid;
 *        the gap is C(d-i+m, d-k) - C(d-i, d-k),   strict iff i <= k + m.
 *
 * Both the inequality and the predicted strictness are asserted for the
 * given k.  Relations that are inapplicable at (i, m) are noted and skipped.
 */
inline CheckReport check_relations(int d, int i, int m, int k) {
    if (!tdm_params_valid(d, i, m))
        throw PreconditionViolated("check_relations needs 2 <= i <= d and 1 <= m <= i/2, got d=" +
                                   std::to_string(d) + " i=" + std::to_string(i) +
                                   " m=" + std::to_string(m));
    if (k < 0 || k > d - 1)
        throw PreconditionViolated("check_relations needs 0 <= k <= d-1, got k=" +
                                   std::to_string(k));

    CheckReport rep;
    rep.check = "tdm-relations";
    rep.set_param("d", d);
    rep.set_param("i", i);
    rep.set_param("m", m);
    rep.set_param("k", k);

    const Integer base = fvec_tdm_formula(d, i, m, k);
    rep.set_param("f_k", base.str());

    const auto check_one = [&](const char* name, const Integer& smaller, const Integer& larger,
                               bool strict_expected) {
        if (smaller > larger)
            rep.fail(std::string("relation ") + name + " fails: " + smaller.str() + " > " +
                     larger.str() + " at k=" + std::to_string(k));
        else if ((smaller < larger) != strict_expected)
            rep.fail(std::string("relation ") + name + " strictness is wrong at k=" +
                     std::to_string(k) + ": " + smaller.str() +
                     (smaller < larger ? " < " : " = ") + larger.str() + " but " +
                     (strict_expected ? "strict" : "equality") + " was predicted");
        else
            rep.note(std::string("relation ") + name + ": " +
                     (strict_expected ? "strict increase" : "equality") + " as predicted");
    };

    if (tdm_params_valid(d, i, m + 1))
        check_one("(i)", base, fvec_tdm_formula(d, i, m + 1, k), m <= k);
    else
        rep.note("relation (i) inapplicable: m+1 exceeds i/2");

    if (tdm_params_valid(d, i + 1, m))
        check_one("(ii)", base, fvec_tdm_formula(d, i + 1, m, k), i <= k + m);
    else
        rep.note("relation (ii) inapplicable: i+1 exceeds d");

    return rep;
}

/**
 * All (i, m) whose T^{d,d-i}_m has exactly d+s facets, i.e. m(i-m) = s-1.
 * Within a class m determines i = m + (s-1)/m, and larger m means smaller i,
 * so the members are returned sorted by m ascending — which turns out to be
 * the order of componentwise increasing f-vectors (see
 * verify_complete_ordering).
 */
inline std::vector<std::pair<int, int>> enumerate_class(int d, int s) {
    if (d < 2) throw PreconditionViolated("enumerate_class needs d >= 2");
    std::vector<std::pair<int, int>> members;
    for (int i = 2; i <= d; ++i)
        for (int m = 1; m <= i / 2; ++m)
            if (static_cast<long long>(m) * (i - m) == static_cast<long long>(s) - 1)
                members.emplace_back(i, m);
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return members;
}

/**
 * Evidence that one class of d-polytopes with d+2 vertices and a common
 * facet count is totally ordered by componentwise f-vector comparison.
 * chain lists the class members (i, m) sorted by m ascending; a valid
 * certificate means every consecutive pair satisfies f_k <= f_k' for all k
 * with strict inequality somewhere.
 */
struct OrderingCertificate {
    int d = 0;
    int facet_count = 0;
    std::vector<std::pair<int, int>> chain;
    std::vector<std::string> violations;

    bool valid() const { return violations.empty(); }
};

/**
 * One certificate per nonempty facet-count class of the T^{d,d-i}_m family.
 * Consecutive chain members are compared through fvec_tdm_formula at every
 * 0 <= k <= d-1; for d <= 8 each member's formula values are additionally
 * cross-checked against the constructed face lattice.
 */
inline std::vector<OrderingCertificate> verify_complete_ordering(int d) {
    if (d < 2) throw PreconditionViolated("verify_complete_ordering needs d >= 2");
    const auto render = [d](std::pair<int, int> p) {
        return "T^{" + std::to_string(d) + "," + std::to_string(d - p.first) + "}_" +
               std::to_string(p.second);
    };

    std::vector<OrderingCertificate> certs;
    const int max_product = (d / 2) * (d - d / 2);
    for (int s = 2; s <= max_product + 1; ++s) {
        auto members = enumerate_class(d, s);
        if (members.empty()) continue;

        OrderingCertificate cert;
        cert.d = d;
        cert.facet_count = d + s;
        cert.chain = std::move(members);

        for (std::size_t t = 0; t + 1 < cert.chain.size(); ++t) {
            const auto [i0, m0] = cert.chain[t];
            const auto [i1, m1] = cert.chain[t + 1];
            bool strict_somewhere = false;
            for (int k = 0; k <= d - 1; ++k) {
                const Integer lo = fvec_tdm_formula(d, i0, m0, k);
                const Integer hi = fvec_tdm_formula(d, i1, m1, k);
                if (lo > hi)
                    cert.violations.push_back("f_" + std::to_string(k) + "(" +
                                              render(cert.chain[t]) + ") = " + lo.str() + " > " +
                                              hi.str() + " = f_" + std::to_string(k) + "(" +
                                              render(cert.chain[t + 1]) + ")");
                if (lo < hi) strict_somewhere = true;
            }
            if (!strict_somewhere)
                cert.violations.push_back(render(cert.chain[t]) + " and " +
                                          render(cert.chain[t + 1]) +
                                          " have identical f-vectors");
        }

        if (d <= 8) {
            for (const auto& member : cert.chain) {
                const FVector fv = tdm_lattice(d, member.first, member.second).f_vector();
                for (int k = 0; k <= d - 1; ++k) {
                    const Integer want = fvec_tdm_formula(d, member.first, member.second, k);
                    if (want != fv.counts[static_cast<std::size_t>(k)])
                        cert.violations.push_back(
                            "formula disagrees with the constructed lattice for " +
                            render(member) + " at k=" + std::to_string(k) + ": " + want.str() +
                            " vs " + std::to_string(fv.counts[static_cast<std::size_t>(k)]));
                }
            }
        }

        certs.push_back(std::move(cert));
    }
    return certs;
}

/**
 * Construction-against-formula sweep: for every valid (i, m) at this d,
 * build T^{d,d-i}_m and compare its whole f-vector with fvec_tdm_formula,
 * plus the two specializations f_0 = d+2 and f_{d-1} = d+1+m(i-m).
 */
inline CheckReport verify_tdm_formula(int d) {
    if (d < 2) throw PreconditionViolated("verify_tdm_formula needs d >= 2");
    CheckReport rep;
    rep.check = "tdm-formula";
    rep.set_param("d", d);

    long long pairs = 0;
    for (int i = 2; i <= d; ++i)
        for (int m = 1; m <= i / 2; ++m) {
            ++pairs;
            const std::string name = "T^{" + std::to_string(d) + "," + std::to_string(d - i) +
                                     "}_" + std::to_string(m);
            const FVector fv = tdm_lattice(d, i, m).f_vector();
            for (int k = 0; k <= d - 1; ++k) {
                const Integer want = fvec_tdm_formula(d, i, m, k);
                if (want != fv.counts[static_cast<std::size_t>(k)])
                    rep.fail("f_" + std::to_string(k) + "(" + name + ") = " +
                             std::to_string(fv.counts[static_cast<std::size_t>(k)]) +
                             " but the formula gives " + want.str());
            }
            if (fv.counts[0] != d + 2)
                rep.fail(name + " has " + std::to_string(fv.counts[0]) +
                         " vertices instead of d+2");
            const long long facets = d + 1 + static_cast<long long>(m) * (i - m);
            if (fv.counts[static_cast<std::size_t>(d - 1)] != facets)
                rep.fail(name + " has " +
                         std::to_string(fv.counts[static_cast<std::size_t>(d - 1)]) +
                         " facets instead of d+1+m(i-m) = " + std::to_string(facets));
        }
    rep.set_param("pairs", pairs);
    if (rep.passed) rep.note("formula matches all constructed lattices");
    return rep;
}

/**
 * The gap delta = A - B obeys an exact Pascal-style recursion in d: for odd
 * d it is literally delta(m, d) = delta(m, d-1) + delta(m-1, d-1), and for
 * even d the ceiling in A shifts by one column, contributing a correction:
 *
 *     delta(m, d) = delta(m, d-1) + delta(m-1, d-1) + C(d/2, m) + C(d/2-1, m).
 *
 * This check verifies, for 6 <= d <= d_max: the recursion exactly (from
 * d = 7 up, through the vanishing region of m), nonnegativity of delta on
 * 1 <= m < ceil(d/2) - 1, the boundary value delta(1, 6) = 1, and — as a
 * note, not an assertion — where A first drops below B for even d.
 */
inline CheckReport verify_appendix(int d_max) {
    CheckReport rep;
    rep.check = "appendix-delta";
    rep.set_param("dmax", d_max);
    if (d_max < 6) {
        rep.note("out of scope: the A/B comparison starts at d = 6");
        return rep;
    }

    if (delta(1, 6) != 1)
        rep.fail("delta(1, 6) = " + delta(1, 6).str() + " instead of 1");

    long long nonneg_cells = 0;
    for (int d = 6; d <= d_max; ++d)
        for (int m = 1; m < (d + 1) / 2 - 1; ++m) {
            ++nonneg_cells;
            const Integer v = delta(m, d);
            if (v < 0)
                rep.fail("delta(" + std::to_string(m) + ", " + std::to_string(d) + ") = " +
                         v.str() + " is negative inside the claimed region");
        }

    long long recursion_cells = 0;
    for (int d = 7; d <= d_max; ++d)
        for (int m = 1; m <= (d + 1) / 2 + 2; ++m) {
            ++recursion_cells;
            Integer rhs = delta(m, d - 1) + delta(m - 1, d - 1);
            if (d % 2 == 0) rhs += binomial(d / 2, m) + binomial(d / 2 - 1, m);
            if (delta(m, d) != rhs)
                rep.fail("recursion fails at (m, d) = (" + std::to_string(m) + ", " +
                         std::to_string(d) + "): delta = " + delta(m, d).str() +
                         ", recursion gives " + rhs.str());
        }
    rep.set_param("nonnegativity_cells", nonneg_cells);
    rep.set_param("recursion_cells", recursion_cells);
    rep.note("recursion is exact for odd d and carries the correction binom(d/2,m) + "
             "binom(d/2-1,m) for even d");

    for (int d = 6; d <= std::min(d_max, 16); d += 2)
        for (int m = 1; m <= d - 1; ++m)
            if (delta(m, d) < 0) {
                rep.note("A(m, " + std::to_string(d) + ") first drops below B at m = " +
                         std::to_string(m));
                break;
            }
    return rep;
}

/**
 * Face-number lower bound phi for a polytope-like (diamond) lattice with
 * s = f_0 - d extra vertices: f_k >= phi(k, f_0, d) for 0 <= k <= d-1.
 * When equality holds at some 1 <= k <= d-2 and s >= 2, the lattice must
 * look like the minimizer: exactly d+2 facets, each with d, d+s-2, or
 * d+s-1 vertices.  (For s = 1 the bound degenerates to the simplex's own
 * f-vector, where that facet description has no content, so the structure
 * clause is skipped.)  s outside [1, d] is flagged as out of scope rather
 * than failed — the bound is only claimed in that range.
 */
inline CheckReport verify_grunbaum(const GradedLattice& L) {
    if (!is_diamond(L))
        throw PreconditionViolated("verify_grunbaum needs a diamond lattice");

    CheckReport rep;
    rep.check = "grunbaum";
    const int d = L.rank() - 1;
    const long long s = static_cast<long long>(L.atoms().size()) - d;
    rep.set_param("d", d);
    rep.set_param("s", s);
    if (d < 1 || s < 1 || s > d) {
        rep.note("out of scope: s = f_0 - d is " + std::to_string(s) +
                 ", the bound is claimed for 1 <= s <= d");
        return rep;
    }

    const FVector fv = L.f_vector();
    const long long n = d + s;
    std::vector<int> equality_ks;
    for (int k = 0; k <= d - 1; ++k) {
        const Integer want = phi(k, n, d);
        const long long have = fv.counts[static_cast<std::size_t>(k)];
        if (want > have)
            rep.fail("f_" + std::to_string(k) + " = " + std::to_string(have) +
                     " is below phi = " + want.str());
        else if (want == have && k >= 1 && k <= d - 2)
            equality_ks.push_back(k);
    }
    if (!rep.passed) return rep;

    if (equality_ks.empty()) {
        rep.note("strictly above the bound for 1 <= k <= d-2");
        return rep;
    }

    std::string ks;
    for (int k : equality_ks) ks += (ks.empty() ? "" : ",") + std::to_string(k);
    rep.note("equality at k = " + ks);

    if (s == 1) {
        // The s = 1 minimizer is the simplex, which has d+1 facets; the
        // d+2-facet description below is meaningful only from s = 2 on.
        rep.note("s = 1: minimizer is the simplex, structure clause void");
        return rep;
    }

    if (static_cast<int>(L.coatoms().size()) != d + 2) {
        rep.fail("equality case has " + std::to_string(L.coatoms().size()) +
                 " facets instead of d+2 = " + std::to_string(d + 2));
        return rep;
    }
    for (int c : L.coatoms()) {
        const long long a = L.atom_count_below(c);
        if (a != d && a != n - 2 && a != n - 1)
            rep.fail("facet " + L.label(c) + " has " + std::to_string(a) +
                     " vertices, outside {d, d+s-2, d+s-1}");
    }
    if (rep.passed) rep.note("facet structure matches the minimizer family");
    return rep;
}

/**
 * Thm: the iterated pyramid over a prism attains phi everywhere.  Builds
 * grunbaum_minimizer(d, s) and asserts f_k = phi(k, d+s, d) for every
 * 0 <= k <= d-1.
 */
inline CheckReport verify_phi_minimizer(int d, int s) {
    if (s < 1 || s > d)
        throw PreconditionViolated("verify_phi_minimizer needs 1 <= s <= d, got d=" +
                                   std::to_string(d) + " s=" + std::to_string(s));
    CheckReport rep;
    rep.check = "phi-minimizer";
    rep.set_param("d", d);
    rep.set_param("s", s);
    // At s = 1 the prism degenerates and the minimizer is the simplex itself.
    const GradedLattice M = s == 1 ? boolean_lattice(d + 1) : grunbaum_minimizer(d, s);
    const FVector fv = M.f_vector();
    for (int k = 0; k <= d - 1; ++k) {
        const Integer want = phi(k, d + s, d);
        if (want != fv.counts[static_cast<std::size_t>(k)])
            rep.fail("minimizer has f_" + std::to_string(k) + " = " +
                     std::to_string(fv.counts[static_cast<std::size_t>(k)]) + ", phi gives " +
                     want.str());
    }
    if (rep.passed) rep.note("f-vector attains phi at every dimension");
    return rep;
}

namespace detail {

/// Number of rank-(k+1) elements of L lying above at least one member of S.
inline long long count_above_some(const GradedLattice& L, const std::vector<int>& S, int k) {
    if (k + 1 < 0 || k + 1 > L.rank()) return 0;
    Bitset above(L.size());
    for (int v : S) above |= L.up_set(v);
    return static_cast<long long>(Bitset::and_count(above, L.rank_mask(k + 1)));
}

} // namespace detail

/**
 * Counting bound for the dimension-k faces meeting a vertex set S, |S| = m,
 * in a polytope-like lattice of rank d+1:
 *
 *   (i)   always:  count >= sum_{t=1..m} C(d-t+1, k);
 *   (ii)  if some vertex of S lies on more than d edges, additionally
 *         count >= (i) + C(d-2, k-1);
 *   (iii) if some facet contains at least 1 and at most m-2 vertices of S,
 *         additionally count >= C(d, k) + C(d-1, k) + sum_{t=1..m-2} C(d-t, k).
 *
 * The hypotheses of (ii) and (iii) are detected from the lattice; bounds
 * whose hypothesis holds are asserted and recorded in params.  In the
 * simplex, an initial segment of vertices attains (i) with equality at
 * every k (the hockey-stick identity), so the base bound is tight.
 */
inline CheckReport key_prop_count(const GradedLattice& L, const std::vector<int>& S, int k) {
    const int d = L.rank() - 1;
    if (S.empty()) throw PreconditionViolated("key_prop_count needs a nonempty vertex set");
    if (k < 0 || k > d - 1)
        throw PreconditionViolated("key_prop_count needs 0 <= k <= d-1, got k=" +
                                   std::to_string(k));
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionViolated("key_prop_count vertex set has repeated elements");
    for (int v : S)
        if (v < 0 || v >= static_cast<int>(L.size()) || L.element_rank(v) != 1)
            throw PreconditionViolated("key_prop_count vertex set contains a non-atom");

    const long long m = static_cast<long long>(S.size());
    CheckReport rep;
    rep.check = "key-prop";
    rep.set_param("d", d);
    rep.set_param("k", k);
    rep.set_param("m", m);

    const long long count = detail::count_above_some(L, S, k);
    rep.set_param("count", count);

    Integer bound_i = 0;
    for (long long t = 1; t <= m; ++t) bound_i += binomial(d - t + 1, k);
    rep.set_param("bound_i", bound_i.str());
    if (count < bound_i)
        rep.fail("count " + std::to_string(count) + " is below the base bound " + bound_i.str());

    for (int v : S)
        if (static_cast<long long>(Bitset::and_count(L.up_set(v), L.rank_mask(2))) > d) {
            const Integer bound_ii = bound_i + binomial(d - 2, k - 1);
            rep.set_param("bound_ii", bound_ii.str());
            rep.note("vertex " + L.label(v) + " lies on more than d edges");
            if (count < bound_ii)
                rep.fail("count " + std::to_string(count) + " is below the edge-rich bound " +
                         bound_ii.str());
            break;
        }

    Bitset in_s(L.size());
    for (int v : S) in_s.set(static_cast<std::size_t>(v));
    for (int c : L.coatoms()) {
        const long long hits = static_cast<long long>(Bitset::and_count(L.down_set(c), in_s));
        if (hits >= 1 && hits <= m - 2) {
            Integer bound_iii = binomial(d, k) + binomial(d - 1, k);
            for (long long t = 1; t <= m - 2; ++t) bound_iii += binomial(d - t, k);
            rep.set_param("bound_iii", bound_iii.str());
            rep.note("facet " + L.label(c) + " contains " + std::to_string(hits) + " of the " +
                     std::to_string(m) + " vertices");
            if (count < bound_iii)
                rep.fail("count " + std::to_string(count) + " is below the split-facet bound " +
                         bound_iii.str());
            break;
        }
    }
    return rep;
}

inline constexpr std::uint64_t default_sample_seed = 1729;

/**
 * key_prop_count over many vertex subsets of L at every 0 <= k <= d-1.
 * With at most 14 atoms all nonempty subsets are enumerated; beyond that,
 * subset_cap subsets are sampled uniformly (each atom an independent coin
 * flip, empty draws rerolled) from the given seed.  The seed is recorded in
 * the report either way, and `instances` counts the (subset, k) pairs
 * checked.  Per-k `slack_k*` / `tight_*_k*` params record the subset that
 * came closest to its strongest applicable bound.
 */
inline CheckReport verify_key_prop(const GradedLattice& L,
                                   std::uint64_t seed = default_sample_seed,
                                   long long subset_cap = 2000) {
    CheckReport rep;
    rep.check = "key-prop-sweep";
    rep.seed = seed;
    const int d = L.rank() - 1;
    const auto& atoms = L.atoms();
    const int na = static_cast<int>(atoms.size());
    rep.set_param("d", d);
    rep.set_param("atoms", na);
    if (d < 1 || na == 0) {
        rep.note("out of scope: no atoms to choose from");
        return rep;
    }

    // per-k tightest instance seen: how close some subset came to its
    // strongest applicable bound (slack 0 means the bound is sharp)
    struct Tight {
        bool set = false;
        Integer slack, bound;
        long long m = 0, count = 0;
    };
    std::vector<Tight> tight(static_cast<std::size_t>(d));

    const auto run_subset = [&](const std::vector<int>& S) {
        for (int k = 0; k <= d - 1; ++k) {
            CheckReport one = key_prop_count(L, S, k);
            const long long count = std::stoll(one.params.at("count"));
            Integer governing(one.params.at("bound_i"));
            for (const char* key : {"bound_ii", "bound_iii"})
                if (auto it = one.params.find(key); it != one.params.end())
                    governing = std::max(governing, Integer(it->second));
            Tight& t = tight[static_cast<std::size_t>(k)];
            if (!t.set || count - governing < t.slack) {
                t.set = true;
                t.slack = count - governing;
                t.bound = governing;
                t.m = static_cast<long long>(S.size());
                t.count = count;
            }
            if (one.passed) continue;
            std::string names;
            for (int v : S) names += (names.empty() ? "" : " ") + L.label(v);
            for (const auto& w : one.witnesses)
                rep.fail("S = {" + names + "}, k = " + std::to_string(k) + ": " + w);
        }
    };

    long long subsets = 0;
    if (na <= 14) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << na); ++mask) {
            std::vector<int> S;
            for (int t = 0; t < na; ++t)
                if (mask >> t & 1) S.push_back(atoms[static_cast<std::size_t>(t)]);
            run_subset(S);
            ++subsets;
        }
        rep.note("all nonempty vertex subsets enumerated");
    } else {
        std::mt19937_64 rng(seed);
        for (long long trial = 0; trial < subset_cap; ++trial) {
            std::vector<int> S;
            while (S.empty())
                for (int t = 0; t < na; ++t)
                    if (rng() & 1) S.push_back(atoms[static_cast<std::size_t>(t)]);
            run_subset(S);
            ++subsets;
        }
        rep.note("vertex subsets sampled");
    }
    rep.set_param("subsets", subsets);
    rep.set_param("instances", subsets * d);
    for (int k = 0; k <= d - 1; ++k) {
        const Tight& t = tight[static_cast<std::size_t>(k)];
        if (!t.set) continue;
        const std::string suffix = "_k" + std::to_string(k);
        rep.set_param("slack" + suffix, t.slack.str());
        rep.set_param("tight_m" + suffix, t.m);
        rep.set_param("tight_bound" + suffix, t.bound.str());
        rep.set_param("tight_count" + suffix, t.count);
    }
    return rep;
}

/**
 * The two-regime lower bound for polytope-like lattices with at least 2d+1
 * vertices: with exactly d+2 facets, f_m >= A(m, d) for 1 <= m <= d-1;
 * with d+3 or more facets, f_m >= B(m, d).  Dimensions where the bound is
 * met with equality are recorded in the notes.  Fewer than 2d+1 vertices
 * violates the standing hypothesis and throws.
 */
inline CheckReport verify_2d1_bound(const GradedLattice& L) {
    const int d = L.rank() - 1;
    if (d < 1) throw PreconditionViolated("verify_2d1_bound needs rank >= 2");
    const FVector fv = L.f_vector();
    if (fv.counts[0] < 2LL * d + 1)
        throw PreconditionViolated("verify_2d1_bound needs at least 2d+1 = " +
                                   std::to_string(2 * d + 1) + " vertices, got " +
                                   std::to_string(fv.counts[0]));

    CheckReport rep;
    rep.check = "two-part-2d1";
    const long long facets = static_cast<long long>(L.coatoms().size());
    rep.set_param("d", d);
    rep.set_param("f_0", fv.counts[0]);
    rep.set_param("facets", facets);

    if (facets < d + 2) {
        rep.note("out of scope: fewer than d+2 facets");
        return rep;
    }
    const bool few = facets == d + 2;
    rep.set_param("bound", few ? "A" : "B");

    std::string equalities;
    for (int m = 1; m <= d - 1; ++m) {
        const Integer want = few ? bound_A(m, d) : bound_B(m, d);
        const long long have = fv.counts[static_cast<std::size_t>(m)];
        if (want > have)
            rep.fail("f_" + std::to_string(m) + " = " + std::to_string(have) + " is below " +
                     (few ? "A" : "B") + "(" + std::to_string(m) + ", " + std::to_string(d) +
                     ") = " + want.str());
        else if (want == have)
            equalities += (equalities.empty() ? "" : ",") + std::to_string(m);
    }
    if (!equalities.empty()) rep.note("meets the bound at m = " + equalities);
    return rep;
}

/**
 * In the simple regime the two sides of the stacked-versus-nabla comparison
 * differ by a single binomial: for 1 <= m <= d-2,
 *
 *     f_{d-1-m}(Stack on d+3 vertices) = B(m, d) + C(d-1, m+1)
 *
 * (so stacked polytopes sit strictly above nabla's face numbers there).
 * Verified through the closed forms for every d, and against the actual
 * stacked_polytope / nabla constructions for d <= 8.
 */
inline CheckReport verify_simple_case(int d) {
    CheckReport rep;
    rep.check = "simple-case";
    rep.set_param("d", d);
    if (d < 3) {
        rep.note("out of scope: needs d >= 3 for a nonempty 1 <= m <= d-2 range");
        return rep;
    }

    for (int m = 1; m <= d - 2; ++m) {
        const Integer lhs = stacked_lbt_fvector(d, d + 3, d - 1 - m);
        const Integer rhs = bound_B(m, d) + binomial(d - 1, m + 1);
        if (lhs != rhs)
            rep.fail("formula identity fails at m = " + std::to_string(m) + ": " + lhs.str() +
                     " vs " + rhs.str());
    }

    if (d <= 8) {
        const FVector st = stacked_polytope(d, d + 3).f_vector();
        const FVector nb = nabla(d).f_vector();
        for (int m = 1; m <= d - 2; ++m) {
            const long long lhs = st.counts[static_cast<std::size_t>(d - 1 - m)];
            const Integer formula = stacked_lbt_fvector(d, d + 3, d - 1 - m);
            if (formula != lhs)
                rep.fail("stacked_lbt_fvector disagrees with the built polytope at m = " +
                         std::to_string(m) + ": " + formula.str() + " vs " +
                         std::to_string(lhs));
            const long long rhs = nb.counts[static_cast<std::size_t>(m)] +
                                  static_cast<long long>(binomial(d - 1, m + 1));
            if (lhs != rhs)
                rep.fail("construction identity fails at m = " + std::to_string(m) + ": " +
                         std::to_string(lhs) + " vs " + std::to_string(rhs));
        }
        rep.note("cross-checked against stacked_polytope and nabla");
    } else {
        rep.note("construction cross-check skipped for d > 8");
    }
    return rep;
}

} // namespace polyface
