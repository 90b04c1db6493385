#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "polyface/json_io.hpp"
#include "polyface/spec_dsl.hpp"
#include "polyface/zoo.hpp"

using namespace polyface;

namespace {

/// Temp-file path that cleans up after itself.
struct ScratchFile {
    std::string path;
    explicit ScratchFile(const std::string& name) : path("/tmp/polyface_io_" + name) {}
    ~ScratchFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("lattice json round trip", "[io]") {
    SECTION("every zoo inhabitant survives serialize/parse") {
        for (const ZooEntry& entry : construction_zoo(4)) {
            const Json j = lattice_to_json(entry.lattice);
            const GradedLattice back = lattice_from_json(j);
            INFO(entry.spec);
            REQUIRE(back.size() == entry.lattice.size());
            REQUIRE(back.rank() == entry.lattice.rank());
            CHECK(back.f_vector().counts == entry.lattice.f_vector().counts);
            for (int x = 0; x < back.size(); ++x) {
                CHECK(back.element_rank(x) == entry.lattice.element_rank(x));
                CHECK(back.label(x) == entry.lattice.label(x));
                CHECK(back.upper_covers(x) == entry.lattice.upper_covers(x));
            }
        }
    }

    SECTION("serialization is byte-stable") {
        const GradedLattice L = realize("dual(tdm(4,3,1))");
        CHECK(lattice_to_json(L).dump() == lattice_to_json(L).dump());
        CHECK(lattice_to_json(L).dump() ==
              lattice_to_json(lattice_from_json(lattice_to_json(L))).dump());
    }

    SECTION("schema shape") {
        const Json j = lattice_to_json(realize("nabla(2)"));
        REQUIRE(j.contains("rank"));
        REQUIRE(j.contains("elements"));
        REQUIRE(j.contains("covers"));
        CHECK(j["rank"] == 3);
        CHECK(j["elements"].size() == 2 + 5 + 5);
        // covers are emitted sorted, so the first one leaves the bottom element
        CHECK(j["covers"][0][0] == 0);
    }
}

TEST_CASE("lattice json rejects malformed input", "[io]") {
    CHECK_THROWS_AS(lattice_from_json(Json{{"rank", 2}}), MalformedLattice);
    CHECK_THROWS_AS(lattice_from_json(Json::array()), MalformedLattice);
    CHECK_THROWS_AS(
        lattice_from_json(Json{{"rank", 1},
                               {"elements", Json::array({Json{{"id", 0}, {"rank", 0}}})},
                               {"covers", "nope"}}),
        MalformedLattice);

    SECTION("declared rank must match the graded structure") {
        Json j = lattice_to_json(realize("simplex(2)"));
        j["rank"] = 7;
        CHECK_THROWS_AS(lattice_from_json(j), MalformedLattice);
    }

    SECTION("cover cycles surface as the builder's own error") {
        Json j;
        j["rank"] = 1;
        j["elements"] = Json::array();
        for (int i = 0; i < 2; ++i) j["elements"].push_back(Json{{"id", i}, {"rank", -1}});
        j["covers"] = Json::array({Json::array({0, 1}), Json::array({1, 0})});
        CHECK_THROWS_AS(lattice_from_json(j), CycleDetected);
    }
}

TEST_CASE("complex json round trip", "[io]") {
    const SimplicialComplex C = SimplicialComplex::from_facets(
        {"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1, 3}, {2, 3}});
    const SimplicialComplex back = complex_from_json(complex_to_json(C));
    CHECK(back.vertex_labels == C.vertex_labels);
    CHECK(back.facets == C.facets);

    SECTION("facets are stored by vertex label") {
        const Json j = complex_to_json(C);
        REQUIRE(j["facets"][0].is_array());
        CHECK(j["facets"][0][0].is_string());
    }

    SECTION("unknown labels rejected") {
        Json j = complex_to_json(C);
        j["facets"][0][0] = "zz";
        CHECK_THROWS_AS(complex_from_json(j), ParseError);
    }

    CHECK_THROWS_AS(complex_from_json(Json{{"vertices", Json::array()}}), ParseError);
}

TEST_CASE("report json shape", "[io]") {
    CheckReport rep;
    rep.check = "demo";
    rep.set_param("d", 4);
    rep.passed = true;

    SECTION("minimal report omits optional fields") {
        const Json j = report_to_json(rep);
        CHECK(j["check"] == "demo");
        CHECK(j["passed"] == true);
        CHECK(j["params"]["d"] == "4");
        CHECK(j["witnesses"].empty());
        CHECK_FALSE(j.contains("seed"));
        CHECK_FALSE(j.contains("notes"));
    }

    SECTION("seed, notes, and omission counter appear when set") {
        rep.seed = 99;
        rep.note("first");
        rep.note("second");
        for (int i = 0; i < 100; ++i) rep.fail("w" + std::to_string(i));
        const Json j = report_to_json(rep);
        CHECK(j["seed"] == 99);
        CHECK(j["notes"] == "first; second");
        CHECK(j["passed"] == false);
        CHECK(j["witnesses"].size() == 64);
        CHECK(j["omitted"] == 36);
    }
}

TEST_CASE("csv tables", "[io]") {
    std::vector<CsvRow> rows;
    rows.push_back({6, 1, 0, Integer(41), Integer(42)});
    rows.push_back({6, 2, 3, Integer("137846528820"), Integer("137846528820")});
    const std::string table = csv_table(rows);
    CHECK(table == "d,s/i/m,k,lhs,rhs,slack\n"
                   "6,1,0,41,42,1\n"
                   "6,2,3,137846528820,137846528820,0\n");
    CHECK(csv_table({}) == "d,s/i/m,k,lhs,rhs,slack\n");
    CHECK(rows[0].slack() == 1);
}

TEST_CASE("json file io", "[io]") {
    ScratchFile f("roundtrip.json");
    const GradedLattice L = realize("pyr(simplex(2),1)");
    write_json_file(f.path, lattice_to_json(L));
    const GradedLattice back = lattice_from_json(read_json_file(f.path));
    CHECK(back.f_vector().counts == L.f_vector().counts);

    SECTION("written files end in a newline") {
        std::ifstream in(f.path);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        REQUIRE_FALSE(text.empty());
        CHECK(text.back() == '\n');
    }

    SECTION("unreadable path") {
        CHECK_THROWS_AS(read_json_file("/tmp/polyface_io_no_such_file.json"), IoError);
    }

    SECTION("syntactically broken json") {
        ScratchFile bad("broken.json");
        std::ofstream(bad.path) << "{\"rank\": ";
        CHECK_THROWS_AS(read_json_file(bad.path), MalformedLattice);
    }
}

TEST_CASE("dsl parse and print round trip", "[io][dsl]") {
    for (const std::string spec :
         {"simplex(4)", "tdm(5,4,2)", "dual(tdm(6,5,2))", "pyr(prism(3),2)",
          "stack(simplex(3))", "nabla(4)", "gmin(5,3)"}) {
        INFO(spec);
        CHECK(to_string(parse_spec(spec)) == spec);
    }

    SECTION("whitespace is tolerated, canonical form is tight") {
        CHECK(to_string(parse_spec(" dual( tdm( 4, 3, 1 ) ) ")) == "dual(tdm(4,3,1))");
    }

    SECTION("garbage rejected") {
        CHECK_THROWS_AS(parse_spec("widget(3)"), ParseError);
        CHECK_THROWS_AS(parse_spec("simplex(3"), ParseError);
        CHECK_THROWS_AS(parse_spec("simplex(x)"), ParseError);
        CHECK_THROWS_AS(parse_spec(""), ParseError);
    }
}
