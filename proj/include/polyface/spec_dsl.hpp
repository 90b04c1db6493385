#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "errors.hpp"
#include "lattice.hpp"

namespace polyface {

/**
 * Constructor expression tree for the polytope families, mirroring the
 * string DSL accepted by the command line:
 *
 *   simplex(d) | tdm(d,i,m) | pyr(spec,t) | prism(s) | stack(spec)
 *   | dual(spec) | nabla(d) | gmin(d,s)
 *
 * Integer arguments and at most one sub-spec, in written order.
 */
struct PolytopeSpec {
    enum class Kind { Simplex, Tdm, Pyr, Prism, Stack, Dual, Nabla, GrunbaumMin };
    Kind kind{};
    std::vector<long long> args;
    std::vector<PolytopeSpec> children;
};

namespace detail {

struct SpecShape {
    const char* name;
    PolytopeSpec::Kind kind;
    bool takes_child;  // child, if any, is always the first argument
    int int_args;
};

inline const SpecShape* spec_shapes(std::size_t& count) {
    static const SpecShape shapes[] = {
        {"simplex", PolytopeSpec::Kind::Simplex, false, 1},
        {"tdm", PolytopeSpec::Kind::Tdm, false, 3},
        {"pyr", PolytopeSpec::Kind::Pyr, true, 1},
        {"prism", PolytopeSpec::Kind::Prism, false, 1},
        {"stack", PolytopeSpec::Kind::Stack, true, 0},
        {"dual", PolytopeSpec::Kind::Dual, true, 0},
        {"nabla", PolytopeSpec::Kind::Nabla, false, 1},
        {"gmin", PolytopeSpec::Kind::GrunbaumMin, false, 2},
    };
    count = sizeof(shapes) / sizeof(shapes[0]);
    return shapes;
}

inline const SpecShape& shape_of(PolytopeSpec::Kind k) {
    std::size_t n = 0;
    const SpecShape* s = spec_shapes(n);
    for (std::size_t j = 0; j < n; ++j)
        if (s[j].kind == k) return s[j];
    throw ParseError("unknown spec kind");
}

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : s_(text) {}

    PolytopeSpec parse() {
        PolytopeSpec spec = parse_spec();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("trailing input after spec at position " + std::to_string(pos_));
        return spec;
    }

private:
    PolytopeSpec parse_spec() {
        skip_ws();
        std::string name;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            name += s_[pos_++];
        if (name.empty()) throw ParseError("expected a constructor name at position " +
                                           std::to_string(pos_));
        std::size_t n = 0;
        const SpecShape* shapes = spec_shapes(n);
        const SpecShape* shape = nullptr;
        for (std::size_t j = 0; j < n; ++j)
            if (name == shapes[j].name) shape = &shapes[j];
        if (!shape) throw ParseError("unknown constructor '" + name + "'");

        PolytopeSpec spec;
        spec.kind = shape->kind;
        expect('(');
        if (shape->takes_child) {
            spec.children.push_back(parse_spec());
            for (int j = 0; j < shape->int_args; ++j) {
                expect(',');
                spec.args.push_back(parse_int());
            }
        } else {
            for (int j = 0; j < shape->int_args; ++j) {
                if (j) expect(',');
                spec.args.push_back(parse_int());
            }
        }
        expect(')');
        return spec;
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start)
            throw ParseError("expected an integer at position " + std::to_string(start));
        if (pos_ - start > 9) throw ParseError("integer argument too large");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "' at position " +
                             std::to_string(pos_));
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse the DSL form; throws ParseError with a position on malformed input.
inline PolytopeSpec parse_spec(const std::string& text) {
    return detail::SpecParser(text).parse();
}

/// Canonical DSL form (round-trips through parse_spec).
inline std::string to_string(const PolytopeSpec& spec) {
    const auto& shape = detail::shape_of(spec.kind);
    std::string out = shape.name;
    out += '(';
    bool first = true;
    for (const auto& c : spec.children) {
        out += to_string(c);
        first = false;
    }
    for (long long a : spec.args) {
        if (!first) out += ',';
        out += std::to_string(a);
        first = false;
    }
    out += ')';
    return out;
}

/**
 * Evaluate a spec tree to its face lattice, enforcing the constructor
 * invariants (SpecInvariantViolated) before touching the builders:
 * tdm needs 2 <= i <= d and 1 <= m <= i/2, gmin needs 2 <= s <= d,
 * nabla needs d >= 2.
 */
inline GradedLattice realize(const PolytopeSpec& spec) {
    using K = PolytopeSpec::Kind;
    auto invariant = [&](bool ok, const std::string& what) {
        if (!ok) throw SpecInvariantViolated("invalid spec " + to_string(spec) + ": " + what);
    };
    switch (spec.kind) {
        case K::Simplex:
            invariant(spec.args[0] >= 0, "simplex dimension must be >= 0");
            return boolean_lattice(static_cast<int>(spec.args[0]) + 1);
        case K::Tdm: {
            long long d = spec.args[0], i = spec.args[1], m = spec.args[2];
            invariant(2 <= i && i <= d, "tdm needs 2 <= i <= d");
            invariant(1 <= m && 2 * m <= i, "tdm needs 1 <= m <= i/2");
            return tdm_lattice(static_cast<int>(d), static_cast<int>(i), static_cast<int>(m));
        }
        case K::Pyr:
            invariant(spec.args[0] >= 0, "pyr count must be >= 0");
            return multi_pyramid(realize(spec.children[0]), static_cast<int>(spec.args[0]));
        case K::Prism:
            invariant(spec.args[0] >= 1, "prism needs s >= 1");
            return prism_lattice(static_cast<int>(spec.args[0]));
        case K::Stack: {
            GradedLattice L = realize(spec.children[0]);
            return stack_over_facet(L, lex_smallest_simplex_facet(L));
        }
        case K::Dual:
            return dual(realize(spec.children[0]));
        case K::Nabla:
            invariant(spec.args[0] >= 2, "nabla needs d >= 2");
            return nabla(static_cast<int>(spec.args[0]));
        case K::GrunbaumMin: {
            long long d = spec.args[0], s = spec.args[1];
            invariant(2 <= s && s <= d, "gmin needs 2 <= s <= d");
            return grunbaum_minimizer(static_cast<int>(d), static_cast<int>(s));
        }
    }
    throw SpecInvariantViolated("unhandled spec kind");
}

/// Parse-and-realize convenience for callers holding the string form.
inline GradedLattice realize(const std::string& dsl) { return realize(parse_spec(dsl)); }

} // namespace polyface
