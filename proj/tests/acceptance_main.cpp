#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polyface/bounds.hpp"
#include "polyface/topology.hpp"
#include "polyface/zoo.hpp"

using namespace polyface;

namespace {

/**
 * Acceptance gate: one line per criterion, [PASS]/[FAIL] plus elapsed time
 * against the criterion's own budget.  A criterion fails on a wrong value or
 * on a blown budget; the process exit code is the number of failures.
 */
struct Gate {
    int index = 0;
    int failures = 0;
    std::string note; // a passing body may set this; shown on its line

    void run(const std::string& title, double limit_s,
             const std::function<std::string()>& body) {
        ++index;
        note.clear();
        std::string reason;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            reason = body();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (reason.empty() && elapsed >= limit_s)
            reason = "time budget exceeded";
        std::printf("[%s] %2d: %s%s%s%s  [%.2fs < %gs]\n", reason.empty() ? "PASS" : "FAIL",
                    index, title.c_str(), note.empty() ? "" : " (", note.c_str(),
                    note.empty() ? "" : ")", elapsed, limit_s);
        if (!reason.empty()) {
            std::printf("        %s\n", reason.c_str());
            ++failures;
        }
    }
};

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

SimplicialComplex glued_triangles() {
    return SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1, 3}});
}

// Two tetrahedron boundaries sharing one vertex.
SimplicialComplex pinched_spheres() {
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<int> f, g;
        for (int v = 0; v < 4; ++v)
            if (v != skip) {
                f.push_back(v);
                g.push_back(v == 0 ? 0 : v + 3);
            }
        facets.push_back(std::move(f));
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets({"p", "a", "b", "c", "d", "e", "f"},
                                          std::move(facets));
}

} // namespace

int main() {
    Gate gate;
    std::printf("acceptance: 11 criteria, exact integer comparisons throughout\n");

    gate.run("nabla(3) f-vector is (7,11,6)", 1.0, [] {
        const FVector fv = nabla(3).f_vector();
        if (fv.counts != std::vector<long long>{7, 11, 6})
            return "got " + fv.to_string();
        return std::string();
    });

    gate.run("nabla closed form for 2 <= d <= 8", 30.0, [] {
        for (int d = 2; d <= 8; ++d) {
            const FVector fv = nabla(d).f_vector();
            if (fv.at(0) != 2 * d + 1)
                return fmt("d=%d: f_0 = %lld, want %d", d, fv.at(0), 2 * d + 1);
            for (int m = 1; m <= d - 1; ++m) {
                const Integer want =
                    binomial(d + 1, m + 1) + binomial(d, m + 1) + binomial(d - 1, m);
                if (Integer(fv.at(m)) != want)
                    return fmt("d=%d m=%d: f_m = %lld, want %s", d, m, fv.at(m),
                               want.str().c_str());
            }
        }
        return std::string();
    });

    gate.run("Tdm formula vs construction, 2 <= i <= d <= 8", 120.0, [] {
        for (int d = 2; d <= 8; ++d)
            for (int i = 2; i <= d; ++i)
                for (int m = 1; 2 * m <= i; ++m) {
                    const FVector fv = tdm_lattice(d, i, m).f_vector();
                    for (int k = 0; k <= d - 1; ++k)
                        if (Integer(fv.at(k)) != fvec_tdm_formula(d, i, m, k))
                            return fmt("d=%d i=%d m=%d k=%d disagrees", d, i, m, k);
                    if (fv.at(d - 1) != d + 1 + static_cast<long long>(m) * (i - m))
                        return fmt("d=%d i=%d m=%d: facet count off", d, i, m);
                }
        if (fvec_tdm_formula(5, 5, 2, 3) != 30 ||
            Integer(tdm_lattice(5, 5, 2).f_vector().at(3)) != 30)
            return std::string("f_3 of T^{5,0}_2 is not 30");
        return std::string();
    });

    gate.run("phi equality at the minimizer, phi lower bound across the zoo", 60.0, [] {
        for (int d = 2; d <= 8; ++d)
            for (int s = 2; s <= d; ++s) {
                const FVector fv = grunbaum_minimizer(d, s).f_vector();
                for (int k = 0; k <= d - 1; ++k)
                    if (Integer(fv.at(k)) != phi(k, d + s, d))
                        return fmt("gmin(%d,%d): f_%d != phi", d, s, k);
            }
        int swept = 0;
        for (const ZooEntry& e : construction_zoo(8)) {
            const int d = e.lattice.rank() - 1;
            const int s = static_cast<int>(e.lattice.atoms().size()) - d;
            if (s < 1 || s > d || !is_diamond(e.lattice)) continue;
            const FVector fv = e.lattice.f_vector();
            for (int k = 0; k <= d - 1; ++k)
                if (Integer(fv.at(k)) < phi(k, d + s, d))
                    return e.spec + fmt(": f_%d below phi", k);
            ++swept;
        }
        if (swept < 50) return fmt("only %d zoo lattices in scope", swept);
        return std::string();
    });

    gate.run("coatom structure at equality (d+2 facets; d, d+s-2 or d+s-1 atoms)", 60.0, [] {
        for (int d = 2; d <= 8; ++d)
            for (int s = 2; s <= d; ++s) {
                const GradedLattice M = grunbaum_minimizer(d, s);
                const auto coatoms = M.coatoms();
                if (static_cast<int>(coatoms.size()) != d + 2)
                    return fmt("gmin(%d,%d): %zu coatoms", d, s, coatoms.size());
                for (int c : coatoms) {
                    const int below = M.atom_count_below(c);
                    if (below != d && below != d + s - 2 && below != d + s - 1)
                        return fmt("gmin(%d,%d): coatom above %d atoms", d, s, below);
                }
            }
        return std::string();
    });

    gate.run("complete ordering of the d+2-vertex classes, d <= 12", 60.0, [] {
        for (int d = 2; d <= 12; ++d)
            for (const OrderingCertificate& cert : verify_complete_ordering(d))
                if (!cert.valid())
                    return fmt("d=%d, %d facets: %s", d, cert.facet_count,
                               cert.violations.front().c_str());
        const auto certs = verify_complete_ordering(6);
        for (const OrderingCertificate& cert : certs)
            if (cert.facet_count == 11 &&
                cert.chain != std::vector<std::pair<int, int>>{{5, 1}, {4, 2}})
                return std::string("d=6 class with 11 facets is not {(5,1),(4,2)}");
        return std::string();
    });

    gate.run("two-part 2d+1 bound is sharp (A via dual Tdm, B via nabla)", 60.0, [&gate] {
        // the 2d+1-vertex sharp instance is the dual of T^{d,d/2-2}_2: its
        // m(i-m) = d gives d+1+d = 2d+1 facets upstairs, vertices downstairs
        for (const int d : {6, 8}) {
            gate.note += (gate.note.empty() ? "" : ", ") +
                         fmt("dual(tdm(%d,%d,2))", d, d / 2 + 2);
            const GradedLattice T = dual(tdm_lattice(d, d / 2 + 2, 2));
            const FVector fv = T.f_vector();
            if (fv.at(0) != 2 * d + 1)
                return fmt("dual(tdm(%d,%d,2)): %lld vertices", d, d / 2 + 2, fv.at(0));
            if (fv.at(d - 1) != d + 2)
                return fmt("dual(tdm(%d,%d,2)): %lld facets", d, d / 2 + 2, fv.at(d - 1));
            for (int m = 1; m <= d - 1; ++m)
                if (Integer(fv.at(m)) != bound_A(m, d))
                    return fmt("dual(tdm(%d,%d,2)): f_%d misses A", d, d / 2 + 2, m);
        }
        for (int d = 2; d <= 8; ++d) {
            const FVector fv = nabla(d).f_vector();
            for (int m = 1; m <= d - 1; ++m)
                if (Integer(fv.at(m)) != bound_B(m, d))
                    return fmt("nabla(%d): f_%d misses B", d, m);
        }
        return std::string();
    });

    gate.run("appendix inequality delta(m,d) >= 0 up to d = 200", 5.0, [] {
        if (delta(1, 6) != 1) return std::string("delta(1,6) != 1");
        for (int d = 6; d <= 200; ++d)
            for (int m = 1; m < (d + 1) / 2 - 1; ++m)
                if (delta(m, d) < 0) return fmt("delta(%d,%d) < 0", m, d);
        return std::string();
    });

    gate.run("key proposition by exhaustive subset counting, d <= 6", 300.0, [&gate] {
        long long instances = 0;
        for (int d = 2; d <= 6; ++d) {
            std::vector<std::pair<std::string, GradedLattice>> corpus;
            corpus.emplace_back(fmt("simplex(%d)", d), boolean_lattice(d + 1));
            corpus.emplace_back(fmt("nabla(%d)", d), nabla(d));
            for (int s = 2; s <= d; ++s)
                corpus.emplace_back(fmt("gmin(%d,%d)", d, s), grunbaum_minimizer(d, s));
            for (int i = 2; i <= d; ++i)
                for (int m = 1; 2 * m <= i; ++m)
                    corpus.emplace_back(fmt("dual(tdm(%d,%d,%d))", d, i, m),
                                        dual(tdm_lattice(d, i, m)));
            for (const auto& [spec, L] : corpus) {
                const std::vector<int> atoms = L.atoms();
                const int na = static_cast<int>(atoms.size());
                if (na > 16) return spec + ": too many atoms to exhaust";
                std::vector<int> S;
                for (unsigned mask = 1; mask < (1u << na); ++mask) {
                    S.clear();
                    for (int a = 0; a < na; ++a)
                        if (mask & (1u << a)) S.push_back(atoms[static_cast<std::size_t>(a)]);
                    for (int k = 0; k <= d - 1; ++k) {
                        if (!key_prop_count(L, S, k).passed)
                            return spec + fmt(": |S|=%zu k=%d undercounts", S.size(), k);
                        ++instances;
                    }
                }
            }
        }
        if (instances < 10000) return fmt("only %lld instances", instances);
        gate.note = fmt("%lld subset instances", instances);
        return std::string();
    });

    gate.run("topology suite on the zoo (d <= 5) with negative controls", 180.0, [] {
        for (const ZooEntry& e : construction_zoo(5)) {
            const int d = e.lattice.rank() - 1;
            const SimplicialComplex oc = order_complex(e.lattice);
            if (!is_connected(oc).passed) return e.spec + ": order complex disconnected";
            if (!is_pseudomanifold(e.lattice).passed) return e.spec + ": not a pseudomanifold";
            if (top_gf2_betti(oc) != 1) return e.spec + ": top Betti != 1";
            for (int k = 0; k <= d - 3; ++k)
                for (const auto& face : oc.faces_of_dim(k))
                    if (!is_connected(link(oc, face)).passed)
                        return e.spec + fmt(": disconnected link of a %d-face", k);
        }

        const SimplicialComplex sphere = SimplicialComplex::from_facets(
            {"w", "x", "y", "z"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
        if (gf2_homology(sphere).betti != std::vector<long long>{1, 0, 1})
            return std::string("boundary of the 3-simplex: homology is not (1,0,1)");

        const CheckReport glued = is_pseudomanifold(glued_triangles());
        if (glued.passed || glued.witnesses.size() != 4 ||
            glued.witnesses.front().find("in 1 facet(s)") == std::string::npos)
            return std::string("glued triangles not rejected with boundary-edge witnesses");

        const SimplicialComplex pinched = pinched_spheres();
        const CheckReport normal = is_normal_pseudomanifold(pinched);
        bool names_pinch = false;
        for (const std::string& w : normal.witnesses)
            if (w.find("link of {p}") != std::string::npos) names_pinch = true;
        if (normal.passed || !names_pinch || top_gf2_betti(pinched) != 2)
            return std::string("pinched spheres not rejected at the pinch vertex");
        return std::string();
    });

    gate.run("simple-case identity for stacked polytopes, d <= 12", 60.0, [] {
        for (int d = 3; d <= 12; ++d)
            for (int m = 1; m <= d - 2; ++m) {
                const Integer want = bound_B(m, d) + binomial(d - 1, m + 1);
                if (stacked_lbt_fvector(d, d + 3, d - 1 - m) != want)
                    return fmt("formula breaks at d=%d m=%d", d, m);
                if (d <= 8) {
                    const FVector fv = stacked_polytope(d, d + 3).f_vector();
                    if (Integer(fv.at(d - 1 - m)) != want)
                        return fmt("Stack(%d,%d) disagrees at m=%d", d + 3, d, m);
                }
            }
        return std::string();
    });

    std::printf("%d of %d criteria passed\n", gate.index - gate.failures, gate.index);
    return gate.failures;
}
