#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "polyface/constructions.hpp"
#include "polyface/lattice.hpp"

using namespace polyface;

namespace {

using Covers = std::vector<std::pair<long long, long long>>;

int by_label(const GradedLattice& L, const std::string& label) {
    for (int x = 0; x < L.size(); ++x)
        if (L.label(x) == label) return x;
    FAIL("no element labeled '" << label << "'");
    return -1;
}

// Face lattice of the square, keyed by hand: 0̂, vertices 1..4, edges, 1̂.
GradedLattice square_lattice() {
    std::vector<ProtoElement> els = {
        {0, 0, "{}"},   {1, 1, "1"},    {2, 1, "2"},    {3, 1, "3"},    {4, 1, "4"},
        {12, 2, "12"},  {23, 2, "23"},  {34, 2, "34"},  {41, 2, "41"},  {99, 3, "<top>"},
    };
    Covers cov = {{0, 1},   {0, 2},   {0, 3},   {0, 4},  {1, 12},  {2, 12},  {2, 23},
                  {3, 23},  {3, 34},  {4, 34},  {4, 41}, {1, 41},  {12, 99}, {23, 99},
                  {34, 99}, {41, 99}};
    return GradedLattice::build_from_covers(els, cov);
}

// Two vertices joined by three parallel edges: three minimal upper bounds.
GradedLattice theta_lattice() {
    std::vector<ProtoElement> els = {{0, 0, "{}"}, {1, 1, "u"},  {2, 1, "v"},
                                     {3, 2, "e1"}, {4, 2, "e2"}, {5, 2, "e3"},
                                     {6, 3, "<top>"}};
    Covers cov = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5},
                  {3, 6}, {4, 6}, {5, 6}};
    return GradedLattice::build_from_covers(els, cov);
}

// A genuine lattice whose interval [a, 1̂] has three middle elements.
GradedLattice three_middles_lattice() {
    std::vector<ProtoElement> els = {{0, 0, "{}"}, {1, 1, "a"}, {2, 1, "b"}, {3, 1, "c"},
                                     {4, 2, "x"},  {5, 2, "y"}, {6, 2, "z"}, {7, 3, "<top>"}};
    Covers cov = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {1, 5},
                  {3, 5}, {1, 6}, {4, 7}, {5, 7}, {6, 7}};
    return GradedLattice::build_from_covers(els, cov);
}

// Two vertices, two parallel edges: coatom sets coincide.
GradedLattice digon_lattice() {
    std::vector<ProtoElement> els = {{0, 0, "{}"}, {1, 1, "u"},  {2, 1, "v"},
                                     {3, 2, "e1"}, {4, 2, "e2"}, {5, 3, "<top>"}};
    Covers cov = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}};
    return GradedLattice::build_from_covers(els, cov);
}

} // namespace

TEST_CASE("build_from_covers accepts chains and diamonds", "[lattice][build]") {
    GradedLattice chain = GradedLattice::build_from_covers(
        {{10, 0, "bot"}, {20, 1, "a"}, {30, 2, "top"}}, {{10, 20}, {20, 30}});
    CHECK(chain.rank() == 2);
    CHECK(chain.f_vector() == FVector({1}));
    CHECK(chain.label(chain.bottom()) == "bot");
    CHECK(chain.label(chain.top()) == "top");

    GradedLattice diamond = GradedLattice::build_from_covers(
        {{0, 0, ""}, {1, 1, "a"}, {2, 1, "b"}, {3, 2, ""}}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(diamond.rank() == 2);
    CHECK(diamond.atoms().size() == 2);
}

TEST_CASE("build_from_covers infers ranks when not declared", "[lattice][build]") {
    GradedLattice chain = GradedLattice::build_from_covers(
        {{1, -1, "bot"}, {2, -1, "mid"}, {3, -1, "top"}}, {{1, 2}, {2, 3}});
    CHECK(chain.rank() == 2);
    CHECK(chain.element_rank(by_label(chain, "mid")) == 1);
}

TEST_CASE("build_from_covers rejects malformed input", "[lattice][build][errors]") {
    SECTION("two maximal elements") {
        CHECK_THROWS_AS(GradedLattice::build_from_covers(
                            {{0, 0, ""}, {1, 1, "a"}, {2, 1, "b"}}, {{0, 1}, {0, 2}}),
                        NotBounded);
    }
    SECTION("two minimal elements") {
        CHECK_THROWS_AS(GradedLattice::build_from_covers(
                            {{0, 0, "a"}, {1, 0, "b"}, {2, 1, ""}}, {{0, 2}, {1, 2}}),
                        NotBounded);
    }
    SECTION("no elements at all") {
        CHECK_THROWS_AS(GradedLattice::build_from_covers({}, {}), NotBounded);
    }
    SECTION("cover skipping a rank") {
        CHECK_THROWS_AS(GradedLattice::build_from_covers(
                            {{0, 0, ""}, {1, 1, ""}, {2, 3, ""}}, {{0, 1}, {1, 2}}),
                        NotGraded);
    }
    SECTION("bottom not at rank zero") {
        CHECK_THROWS_AS(
            GradedLattice::build_from_covers({{0, 1, ""}, {1, 2, ""}}, {{0, 1}}),
            NotGraded);
    }
    SECTION("directed cycle with inferred ranks") {
        CHECK_THROWS_AS(GradedLattice::build_from_covers(
                            {{0, -1, ""}, {1, -1, ""}, {2, -1, ""}},
                            {{0, 1}, {1, 2}, {2, 0}}),
                        CycleDetected);
    }
    SECTION("self-cover") {
        CHECK_THROWS_AS(
            GradedLattice::build_from_covers({{0, 0, ""}, {1, 1, ""}}, {{0, 0}, {0, 1}}),
            CycleDetected);
    }
    SECTION("duplicate keys") {
        CHECK_THROWS_AS(
            GradedLattice::build_from_covers({{7, 0, ""}, {7, 1, ""}}, {{7, 7}}),
            MalformedLattice);
    }
    SECTION("cover naming an unknown key") {
        CHECK_THROWS_AS(
            GradedLattice::build_from_covers({{0, 0, ""}, {1, 1, ""}}, {{0, 5}}),
            MalformedLattice);
    }
}

TEST_CASE("canonical ids ascend with rank", "[lattice][build]") {
    GradedLattice L = square_lattice();
    for (int x = 0; x + 1 < L.size(); ++x) CHECK(L.element_rank(x) <= L.element_rank(x + 1));
    CHECK(L.element_rank(L.bottom()) == 0);
    CHECK(L.element_rank(L.top()) == L.rank());
}

TEST_CASE("size limit honors the environment override", "[lattice][build][errors]") {
    setenv("POLYFACE_SIZE_LIMIT", "10", 1);
    CHECK_THROWS_AS(boolean_lattice(5), SizeLimit);
    unsetenv("POLYFACE_SIZE_LIMIT");
    CHECK(boolean_lattice(5).size() == 32);
}

TEST_CASE("meet and join in the Boolean lattice are intersection and union",
          "[lattice][meet-join]") {
    GradedLattice B3 = boolean_lattice(3);
    int xy = by_label(B3, "{0 1}"), yz = by_label(B3, "{1 2}");
    REQUIRE(B3.meet(xy, yz).has_value());
    CHECK(B3.label(*B3.meet(xy, yz)) == "{1}");
    REQUIRE(B3.join(xy, yz).has_value());
    CHECK(*B3.join(xy, yz) == B3.top());

    for (int x = 0; x < B3.size(); ++x) {
        CHECK(*B3.join(x, B3.bottom()) == x);   // bottom is neutral for join
        CHECK(*B3.meet(x, B3.top()) == x);
    }
}

TEST_CASE("is_lattice flags the theta graph at its two vertices", "[lattice][meet-join]") {
    GradedLattice theta = theta_lattice();
    PairWitness w;
    REQUIRE_FALSE(is_lattice(theta, &w));
    CHECK(w.what == "join");
    CHECK(theta.label(w.a) == "u");
    CHECK(theta.label(w.b) == "v");
    // the two vertices still have a meet, namely the bottom
    CHECK(*theta.meet(w.a, w.b) == theta.bottom());
    // and the join is absent precisely because of three minimal upper bounds
    CHECK_FALSE(theta.join(w.a, w.b).has_value());
}

TEST_CASE("is_lattice accepts polytope face lattices", "[lattice][meet-join]") {
    CHECK(is_lattice(square_lattice()));
    CHECK(is_lattice(boolean_lattice(4)));
    CHECK(is_lattice(three_middles_lattice()));  // poor rank-2 intervals, but a lattice
}

TEST_CASE("is_diamond", "[lattice][diamond]") {
    for (int n = 1; n <= 5; ++n) CHECK(is_diamond(boolean_lattice(n)));
    CHECK(is_diamond(square_lattice()));

    GradedLattice L = three_middles_lattice();
    PairWitness w;
    REQUIRE_FALSE(is_diamond(L, &w));
    // scan order finds [0̂, z] first: z sits over the single atom a
    CHECK(w.a == L.bottom());
    CHECK(L.label(w.b) == "z");
    CHECK(w.what == "interval has 1 middle elements");
    // the headline defect is [a, 1̂] with its three middle elements
    Interval upper = interval(L, by_label(L, "a"), L.top());
    CHECK(upper.lattice.elements_of_rank(1).size() == 3);
}

TEST_CASE("is_coatom_distinguishable", "[lattice][coatoms]") {
    CHECK(is_coatom_distinguishable(boolean_lattice(5)));
    CHECK(is_coatom_distinguishable(square_lattice()));

    SECTION("chain is vacuously distinguishable") {
        GradedLattice chain = GradedLattice::build_from_covers(
            {{0, 0, ""}, {1, 1, ""}, {2, 2, ""}, {3, 3, ""}}, {{0, 1}, {1, 2}, {2, 3}});
        CHECK(is_coatom_distinguishable(chain));
    }
    SECTION("digon vertices share their coatom set") {
        GradedLattice digon = digon_lattice();
        PairWitness w;
        REQUIRE_FALSE(is_coatom_distinguishable(digon, &w));
        CHECK(digon.element_rank(w.a) == 1);
        CHECK(digon.element_rank(w.b) == 1);
        CHECK(w.a != w.b);
    }
}

TEST_CASE("is_boolean recognizes exactly the simplex lattices", "[lattice][boolean]") {
    for (int n = 0; n <= 11; ++n) CHECK(is_boolean(boolean_lattice(n)));
    CHECK_FALSE(is_boolean(square_lattice()));      // 4 atoms but 10 != 16 elements
    CHECK_FALSE(is_boolean(three_middles_lattice()));
    CHECK_FALSE(is_boolean(digon_lattice()));

    SECTION("every upper interval of a Boolean lattice is Boolean") {
        GradedLattice B5 = boolean_lattice(5);
        for (int t = 0; t < B5.size(); ++t)
            CHECK(is_boolean(interval(B5, t, B5.top()).lattice));
    }
}

TEST_CASE("upper intervals stay at least Boolean-sized", "[lattice][intervals]") {
    CHECK(check_upper_intervals_atleast_boolean(boolean_lattice(5)));
    CHECK(check_upper_intervals_atleast_boolean(square_lattice()));

    SECTION("a bare chain undershoots at the bottom") {
        // [0̂,1̂] has one rank-1 element where B^2 has two
        GradedLattice chain = GradedLattice::build_from_covers(
            {{0, 0, ""}, {1, 1, ""}, {2, 2, ""}}, {{0, 1}, {1, 2}});
        IntervalCountWitness w;
        REQUIRE_FALSE(check_upper_intervals_atleast_boolean(chain, &w));
        CHECK(w.element == chain.bottom());
        CHECK(w.r == 1);
        CHECK(w.count == 1);
        CHECK(w.bound == 2);
    }
    SECTION("the lopsided rank-3 lattice undershoots over atom b") {
        GradedLattice L = three_middles_lattice();
        IntervalCountWitness w;
        REQUIRE_FALSE(check_upper_intervals_atleast_boolean(L, &w));
        CHECK(L.label(w.element) == "b");  // b lies under only one rank-2 element
        CHECK(w.r == 1);
        CHECK(w.count == 1);
        CHECK(w.bound == 2);
    }
}

TEST_CASE("check_all_cones_boolean", "[lattice][intervals]") {
    GradedLattice B4 = boolean_lattice(4);
    ConeCheck full = check_all_cones_boolean(B4, B4.bottom(), B4.top());
    CHECK(full.hypothesis);
    CHECK(full.conclusion);

    GradedLattice sq = square_lattice();
    ConeCheck whole = check_all_cones_boolean(sq, sq.bottom(), sq.top());
    CHECK_FALSE(whole.hypothesis);  // each edge misses two of the four vertices

    // lower facet-intervals of the square are segments, i.e. Boolean
    for (int f : sq.coatoms()) {
        ConeCheck c = check_all_cones_boolean(sq, sq.bottom(), f);
        CHECK(c.hypothesis);
        CHECK(c.conclusion);
    }
}

TEST_CASE("pyramid is the product with a segment's lattice", "[lattice][pyramid]") {
    GradedLattice point = boolean_lattice(1);
    GradedLattice segment = pyramid(point);
    CHECK(segment.rank() == 2);
    CHECK(is_boolean(segment));

    GradedLattice sqpyr = pyramid(square_lattice());
    CHECK(sqpyr.f_vector() == FVector({5, 8, 5}));

    SECTION("f-vector recursion") {
        for (const GradedLattice& L : {square_lattice(), boolean_lattice(4), sqpyr}) {
            FVector before = L.f_vector(), after = pyramid(L).f_vector();
            REQUIRE(after.dim() == before.dim() + 1);
            for (int k = 0; k <= before.dim(); ++k)
                CHECK(after.at(k) == before.at(k) + before.at(k - 1));
        }
    }
    SECTION("labels stay unique under iterated pyramids") {
        GradedLattice L = pyramid(pyramid(square_lattice()));
        std::set<std::string> labels;
        for (int x = 0; x < L.size(); ++x) labels.insert(L.label(x));
        CHECK(static_cast<int>(labels.size()) == L.size());
    }
}

TEST_CASE("dual reverses the order", "[lattice][dual]") {
    GradedLattice sqpyr = pyramid(square_lattice());
    GradedLattice d = dual(sqpyr);
    CHECK(d.f_vector() == FVector({5, 8, 5}));  // square pyramid is self-dual
    CHECK(is_lattice(d));
    CHECK(is_diamond(d));

    SECTION("dual of a Boolean lattice is Boolean") {
        for (int n = 1; n <= 6; ++n) CHECK(is_boolean(dual(boolean_lattice(n))));
    }
    SECTION("dual is an involution, element for element") {
        GradedLattice dd = dual(d);
        REQUIRE(dd.size() == sqpyr.size());
        for (int x = 0; x < sqpyr.size(); ++x) {
            CHECK(dd.element_rank(x) == sqpyr.element_rank(x));
            CHECK(dd.label(x) == sqpyr.label(x));
        }
        CHECK(dd.cover_pairs() == sqpyr.cover_pairs());
    }
    SECTION("f-vector reversal") {
        GradedLattice prism = prism_lattice(3);
        FVector f = prism.f_vector(), g = dual(prism).f_vector();
        for (int k = 0; k < f.dim(); ++k) CHECK(g.at(k) == f.at(f.dim() - 1 - k));
    }
}

TEST_CASE("interval extraction", "[lattice][intervals]") {
    GradedLattice B4 = boolean_lattice(4);

    SECTION("the full interval is the lattice itself") {
        Interval all = interval(B4, B4.bottom(), B4.top());
        CHECK(all.lattice.size() == B4.size());
        CHECK(all.lattice.cover_pairs() == B4.cover_pairs());
    }
    SECTION("upper interval over an atom of B^4 is B^3") {
        Interval up = interval(B4, B4.atoms()[0], B4.top());
        CHECK(up.lattice.rank() == 3);
        CHECK(is_boolean(up.lattice));
    }
    SECTION("incomparable endpoints throw") {
        GradedLattice sq = square_lattice();
        CHECK_THROWS_AS(interval(sq, sq.atoms()[0], sq.atoms()[1]), NotComparable);
    }
}

TEST_CASE("atoms and coatoms", "[lattice]") {
    GradedLattice sq = square_lattice();
    CHECK(sq.atoms().size() == 4);
    CHECK(sq.coatoms().size() == 4);
    CHECK(sq.atoms_below(sq.top()) == sq.atoms());
    CHECK(sq.atom_count_below(by_label(sq, "12")) == 2);

    GradedLattice B6 = boolean_lattice(6);
    CHECK(B6.atoms().size() == 6);
}

TEST_CASE("f-vector conventions", "[lattice][fvector]") {
    FVector f = boolean_lattice(4).f_vector();
    CHECK(f == FVector({4, 6, 4}));
    CHECK(f.at(-1) == 1);
    CHECK(f.at(3) == 1);
    CHECK(f.at(-2) == 0);
    CHECK(f.at(7) == 0);
    CHECK(f.to_string() == "(4,6,4)");
    CHECK(f.euler() == 2);                       // boundary of the 3-simplex
    CHECK(square_lattice().f_vector().euler() == 0);
}
