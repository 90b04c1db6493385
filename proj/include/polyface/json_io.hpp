#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyface/errors.hpp"
#include "polyface/lattice.hpp"
#include "polyface/numbers.hpp"
#include "polyface/report.hpp"
#include "polyface/simplicial_complex.hpp"

namespace polyface {

using Json = nlohmann::json;

/**
 * Lattice file format:
 *
 *     {"rank": r,
 *      "elements": [{"id": int, "rank": int, "label": string?}, ...],
 *      "covers":   [[lowerId, upperId], ...]}
 *
 * Ids are free-form keys; on read the lattice is rebuilt and renumbered
 * canonically (by rank, then input order), so ids are not preserved across
 * a round trip but ranks, labels and all derived data are.  Bottom and top
 * are not marked — they are the unique rank-0 and rank-r elements.
 */
inline Json lattice_to_json(const GradedLattice& L) {
    Json elements = Json::array();
    for (int x = 0; x < L.size(); ++x) {
        Json e{{"id", x}, {"rank", L.element_rank(x)}};
        if (!L.label(x).empty()) e["label"] = L.label(x);
        elements.push_back(std::move(e));
    }
    Json covers = Json::array();
    for (int x = 0; x < L.size(); ++x)
        for (int y : L.upper_covers(x)) covers.push_back(Json::array({x, y}));
    std::sort(covers.begin(), covers.end());
    return Json{{"rank", L.rank()}, {"elements", std::move(elements)},
                {"covers", std::move(covers)}};
}

inline GradedLattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("elements") ||
        !j.contains("covers"))
        throw MalformedLattice("lattice JSON needs rank, elements and covers");
    if (!j["rank"].is_number_integer() || !j["elements"].is_array() || !j["covers"].is_array())
        throw MalformedLattice("lattice JSON fields have the wrong types");

    std::vector<ProtoElement> elements;
    for (const Json& e : j["elements"]) {
        if (!e.is_object() || !e.contains("id") || !e.contains("rank") ||
            !e["id"].is_number_integer() || !e["rank"].is_number_integer())
            throw MalformedLattice("lattice element needs integer id and rank");
        ProtoElement pe;
        pe.key = e["id"].get<long long>();
        pe.rank = e["rank"].get<int>();
        if (e.contains("label")) {
            if (!e["label"].is_string()) throw MalformedLattice("element label must be a string");
            pe.label = e["label"].get<std::string>();
        }
        elements.push_back(std::move(pe));
    }
    std::vector<std::pair<long long, long long>> covers;
    for (const Json& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer())
            throw MalformedLattice("cover entries must be [lowerId, upperId] pairs");
        covers.emplace_back(c[0].get<long long>(), c[1].get<long long>());
    }

    GradedLattice L = GradedLattice::build_from_covers(elements, covers);
    if (L.rank() != j["rank"].get<int>())
        throw MalformedLattice("declared rank " + j["rank"].dump() +
                               " does not match the built rank " + std::to_string(L.rank()));
    return L;
}

/// Complex file format: {"vertices": [labels], "facets": [[labels]]}.
inline Json complex_to_json(const SimplicialComplex& C) {
    Json vertices = Json::array();
    for (const std::string& label : C.vertex_labels) vertices.push_back(label);
    Json facets = Json::array();
    for (const auto& f : C.facets) {
        Json one = Json::array();
        for (int v : f) one.push_back(C.vertex_labels[static_cast<std::size_t>(v)]);
        facets.push_back(std::move(one));
    }
    return Json{{"vertices", std::move(vertices)}, {"facets", std::move(facets)}};
}

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets") ||
        !j["vertices"].is_array() || !j["facets"].is_array())
        throw ParseError("complex JSON needs vertices and facets arrays");
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    for (const Json& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex labels must be strings");
        if (!index.emplace(v.get<std::string>(), static_cast<int>(labels.size())).second)
            throw ParseError("repeated vertex label " + v.dump());
        labels.push_back(v.get<std::string>());
    }
    std::vector<std::vector<int>> facets;
    for (const Json& f : j["facets"]) {
        if (!f.is_array()) throw ParseError("facets must be arrays of vertex labels");
        std::vector<int> ids;
        for (const Json& v : f) {
            const auto it = v.is_string() ? index.find(v.get<std::string>()) : index.end();
            if (it == index.end())
                throw ParseError("facet vertex " + v.dump() + " is not in the vertex list");
            ids.push_back(it->second);
        }
        facets.push_back(std::move(ids));
    }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

/**
 * Report schema: {"check": string, "params": object, "passed": bool,
 * "witnesses": [string]}, plus "seed" when the check sampled, "notes" when
 * it has any, and "omitted" when witnesses overflowed the cap.  nlohmann's
 * object keeps keys sorted, so serialization is deterministic.
 */
inline Json report_to_json(const CheckReport& rep) {
    Json j{{"check", rep.check},
           {"params", Json::object()},
           {"passed", rep.passed},
           {"witnesses", rep.witnesses}};
    for (const auto& [key, value] : rep.params) j["params"][key] = value;
    if (rep.seed) j["seed"] = *rep.seed;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    if (rep.omitted > 0) j["omitted"] = rep.omitted;
    return j;
}

/**
 * One row of the comparison-table CSV: a parameter point (d, p, k) and the
 * two sides of an inequality lhs <= rhs with slack = rhs - lhs.  `p` is the
 * verb's family parameter (s, i or m — the header names all three); checks
 * without a k dimension emit k = 0.
 */
struct CsvRow {
    long long d = 0;
    long long p = 0;
    long long k = 0;
    Integer lhs;
    Integer rhs;

    Integer slack() const { return rhs - lhs; }
};

inline std::string csv_table(const std::vector<CsvRow>& rows) {
    std::string out = "d,s/i/m,k,lhs,rhs,slack\n";
    for (const CsvRow& r : rows)
        out += std::to_string(r.d) + "," + std::to_string(r.p) + "," + std::to_string(r.k) +
               "," + r.lhs.str() + "," + r.rhs.str() + "," + r.slack().str() + "\n";
    return out;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw MalformedLattice(path + " is not valid JSON");
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing " + path);
}

} // namespace polyface
