#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "polyface/bounds.hpp"
#include "polyface/dual_checks.hpp"
#include "polyface/json_io.hpp"
#include "polyface/spec_dsl.hpp"
#include "polyface/topology.hpp"

namespace polyface {
namespace cli_detail {

enum class Format { text, json, csv };

inline Format format_of(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return Format::text;
}

inline std::string join_counts(const FVector& fv) {
    std::string s;
    for (long long c : fv.counts) s += (s.empty() ? "" : ",") + std::to_string(c);
    return s;
}

inline std::string name_of(const GradedLattice& L, int x) {
    return L.label(x).empty() ? "#" + std::to_string(x) : L.label(x);
}

inline void print_report(std::ostream& out, const CheckReport& rep) {
    out << (rep.passed ? "[PASS] " : "[FAIL] ") << rep.check;
    if (!rep.params.empty()) {
        out << " (";
        bool first = true;
        for (const auto& [key, value] : rep.params) {
            if (value.size() > 24) continue; // long diagnostics stay in JSON output
            out << (first ? "" : ", ") << key << "=" << value;
            first = false;
        }
        out << ")";
    }
    out << "\n";
    for (const auto& w : rep.witnesses) out << "  ! " << w << "\n";
    if (rep.omitted > 0) out << "  ! ... and " << rep.omitted << " more\n";
    if (!rep.notes.empty()) out << "  - " << rep.notes << "\n";
    if (rep.seed) out << "  seed: " << *rep.seed << "\n";
}

/// Everything a verb produces: a report stream plus (for csv) a comparison table.
struct VerbOutput {
    std::vector<CheckReport> reports;
    std::vector<CsvRow> rows;

    void absorb(VerbOutput other) {
        reports.insert(reports.end(), std::make_move_iterator(other.reports.begin()),
                       std::make_move_iterator(other.reports.end()));
        rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    }

    bool all_passed() const {
        return std::all_of(reports.begin(), reports.end(),
                           [](const CheckReport& r) { return r.passed; });
    }
};

/**
 * Run fn(0..count-1) and concatenate results in index order.  With jobs > 1
 * the calls fan out in waves of that size; results are still appended in
 * parameter order, so output is deterministic regardless of scheduling.
 */
template <typename Fn>
inline VerbOutput run_indexed(int count, int jobs, Fn fn) {
    VerbOutput all;
    if (jobs < 2 || count < 2) {
        for (int i = 0; i < count; ++i) all.absorb(fn(i));
        return all;
    }
    for (int start = 0; start < count; start += jobs) {
        const int end = std::min(count, start + jobs);
        std::vector<std::future<VerbOutput>> wave;
        for (int i = start; i < end; ++i)
            wave.push_back(std::async(std::launch::async, fn, i));
        for (auto& f : wave) all.absorb(f.get());
    }
    return all;
}

inline GradedLattice load_lattice_or_spec(const std::string& input) {
    const bool json_name = input.size() > 5 && input.substr(input.size() - 5) == ".json";
    if (json_name) return lattice_from_json(read_json_file(input));
    if (std::ifstream probe(input); probe.good()) return lattice_from_json(read_json_file(input));
    return realize(input);
}

/// Renders reports/rows per format and writes to the stream or --out file.
inline void emit(const VerbOutput& result, Format format, const std::string& out_path,
                 std::ostream& out) {
    std::string text;
    if (format == Format::csv) {
        text = csv_table(result.rows);
    } else if (format == Format::json) {
        Json arr = Json::array();
        for (const auto& rep : result.reports) arr.push_back(report_to_json(rep));
        text = arr.dump(2) + "\n";
    } else {
        std::ostringstream buf;
        std::size_t failed = 0;
        for (const auto& rep : result.reports) {
            print_report(buf, rep);
            if (!rep.passed) ++failed;
        }
        buf << result.reports.size() << " check(s), " << failed << " failed\n";
        text = buf.str();
    }
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path);
        if (!file) throw IoError("cannot open " + out_path + " for writing");
        file << text;
        if (!file) throw IoError("failed writing " + out_path);
    }
}

inline int resolve_dim(int d_opt, int dmax_opt, int fallback) {
    if (d_opt > 0) return d_opt;
    if (dmax_opt > 0) return dmax_opt;
    return fallback;
}

inline std::string tdm_name(int d, int i, int m) {
    return "T^{" + std::to_string(d) + "," + std::to_string(d - i) + "}_" + std::to_string(m);
}

/**
 * Theorem dispatch shared by `verify` and `sweep`.  Construction sweeps
 * default to d <= 8, pure-formula sweeps go further (appendix to d = 200,
 * the ordering formulas to d = 12); --d/--dmax override.  want_rows turns
 * on the comparison-table pass, which may rebuild lattices.
 */
inline VerbOutput run_theorem(const std::string& name, int d_opt, int dmax_opt,
                              std::uint64_t seed, int jobs, bool want_rows) {
    VerbOutput result;

    if (name == "phi-minimizer") {
        const int d = resolve_dim(d_opt, dmax_opt, 8);
        if (d < 1) throw PreconditionViolated("phi-minimizer needs d >= 1");
        result = run_indexed(d, jobs, [&](int idx) {
            const int s = idx + 1;
            VerbOutput one;
            one.reports.push_back(verify_phi_minimizer(d, s));
            if (want_rows) {
                const GradedLattice M =
                    s == 1 ? boolean_lattice(d + 1) : grunbaum_minimizer(d, s);
                const FVector fv = M.f_vector();
                for (int k = 0; k <= d - 1; ++k)
                    one.rows.push_back({d, s, k, phi(k, d + s, d),
                                        Integer(fv.counts[static_cast<std::size_t>(k)])});
            }
            return one;
        });
    } else if (name == "ordering") {
        const int d = resolve_dim(d_opt, dmax_opt, 8);
        for (const OrderingCertificate& cert : verify_complete_ordering(d)) {
            CheckReport rep;
            rep.check = "ordering";
            rep.set_param("d", cert.d);
            rep.set_param("facets", cert.facet_count);
            std::string chain;
            for (const auto& [i, m] : cert.chain)
                chain += (chain.empty() ? "" : " <= ") + tdm_name(d, i, m);
            rep.set_param("chain", chain);
            for (const std::string& v : cert.violations) rep.fail(v);
            result.reports.push_back(std::move(rep));
            if (want_rows)
                for (std::size_t t = 0; t + 1 < cert.chain.size(); ++t)
                    for (int k = 0; k <= d - 1; ++k)
                        result.rows.push_back(
                            {d, cert.facet_count - d, k,
                             fvec_tdm_formula(d, cert.chain[t].first, cert.chain[t].second, k),
                             fvec_tdm_formula(d, cert.chain[t + 1].first,
                                              cert.chain[t + 1].second, k)});
        }
    } else if (name == "appendix") {
        const int dmax = resolve_dim(d_opt, dmax_opt, 200);
        result.reports.push_back(verify_appendix(dmax));
        if (want_rows)
            for (int d = 6; d <= dmax; ++d)
                for (int m = 1; m < (d + 1) / 2 - 1; ++m)
                    result.rows.push_back({d, m, 0, bound_B(m, d), bound_A(m, d)});
    } else if (name == "two-part-2d1") {
        const int dmax = resolve_dim(d_opt, dmax_opt, 8);
        result = run_indexed(std::max(0, dmax - 2), jobs, [&](int idx) {
            const int d = idx + 3;
            VerbOutput one;
            const GradedLattice nb = nabla(d);
            CheckReport rep = verify_2d1_bound(nb);
            rep.set_param("lattice", "nabla(" + std::to_string(d) + ")");
            one.reports.push_back(std::move(rep));
            if (want_rows) {
                const FVector fv = nb.f_vector();
                for (int m = 1; m <= d - 1; ++m)
                    one.rows.push_back({d, m, 0, bound_B(m, d),
                                        Integer(fv.counts[static_cast<std::size_t>(m)])});
            }
            if (d >= 6 && d % 2 == 0) {
                // the sharp d+2-facet instance: dual of T^{d,d/2-2}_2, whose
                // m(i-m) = d gives it exactly 2d+1 vertices
                const GradedLattice sharp = dual(tdm_lattice(d, d / 2 + 2, 2));
                CheckReport arep = verify_2d1_bound(sharp);
                arep.set_param("lattice",
                               "dual(tdm(" + std::to_string(d) + "," +
                                   std::to_string(d / 2 + 2) + ",2))");
                one.reports.push_back(std::move(arep));
                if (want_rows) {
                    const FVector fv = sharp.f_vector();
                    for (int m = 1; m <= d - 1; ++m)
                        one.rows.push_back({d, m, 0, bound_A(m, d),
                                            Integer(fv.counts[static_cast<std::size_t>(m)])});
                }
            }
            return one;
        });
    } else if (name == "key-prop") {
        const int dmax = resolve_dim(d_opt, dmax_opt, 5);
        std::vector<std::pair<std::string, GradedLattice>> corpus;
        for (int d = 2; d <= dmax; ++d) {
            corpus.emplace_back("simplex(" + std::to_string(d) + ")", boolean_lattice(d + 1));
            corpus.emplace_back("nabla(" + std::to_string(d) + ")", nabla(d));
            for (int s = 2; s <= d; ++s)
                corpus.emplace_back(
                    "gmin(" + std::to_string(d) + "," + std::to_string(s) + ")",
                    grunbaum_minimizer(d, s));
            for (int i = 2; i <= d; ++i)
                for (int m = 1; m <= i / 2; ++m)
                    corpus.emplace_back("dual(tdm(" + std::to_string(d) + "," +
                                            std::to_string(i) + "," + std::to_string(m) + "))",
                                        dual(tdm_lattice(d, i, m)));
        }
        result = run_indexed(static_cast<int>(corpus.size()), jobs, [&](int idx) {
            const auto& [spec, L] = corpus[static_cast<std::size_t>(idx)];
            VerbOutput one;
            CheckReport rep = verify_key_prop(L, seed);
            rep.set_param("lattice", spec);
            if (want_rows) {
                const int d = L.rank() - 1;
                for (int k = 0; k <= d - 1; ++k) {
                    const std::string suffix = "_k" + std::to_string(k);
                    const auto bound = rep.params.find("tight_bound" + suffix);
                    if (bound == rep.params.end()) continue;
                    one.rows.push_back({d, std::stoll(rep.params.at("tight_m" + suffix)), k,
                                        Integer(bound->second),
                                        Integer(rep.params.at("tight_count" + suffix))});
                }
            }
            one.reports.push_back(std::move(rep));
            return one;
        });
    } else if (name == "simple-case") {
        const int dmax = resolve_dim(d_opt, dmax_opt, 12);
        result = run_indexed(std::max(0, dmax - 2), jobs, [&](int idx) {
            const int d = idx + 3;
            VerbOutput one;
            one.reports.push_back(verify_simple_case(d));
            if (want_rows)
                for (int m = 1; m <= d - 2; ++m)
                    one.rows.push_back({d, m, 0, bound_B(m, d) + binomial(d - 1, m + 1),
                                        stacked_lbt_fvector(d, d + 3, d - 1 - m)});
            return one;
        });
    } else if (name == "tdm-formula") {
        const int dmax = resolve_dim(d_opt, dmax_opt, 8);
        result = run_indexed(std::max(0, dmax - 1), jobs, [&](int idx) {
            const int d = idx + 2;
            VerbOutput one;
            one.reports.push_back(verify_tdm_formula(d));
            if (want_rows)
                for (int i = 2; i <= d; ++i)
                    for (int m = 1; m <= i / 2; ++m) {
                        const FVector fv = tdm_lattice(d, i, m).f_vector();
                        for (int k = 0; k <= d - 1; ++k)
                            one.rows.push_back(
                                {d, static_cast<long long>(m) * (i - m) + 1, k,
                                 Integer(fv.counts[static_cast<std::size_t>(k)]),
                                 fvec_tdm_formula(d, i, m, k)});
                    }
            return one;
        });
    } else {
        throw UnknownTheorem("unknown theorem '" + name +
                             "'; expected one of phi-minimizer, ordering, appendix, "
                             "two-part-2d1, key-prop, simple-case, tdm-formula");
    }
    return result;
}

inline constexpr const char* all_theorems[] = {
    "phi-minimizer", "ordering", "appendix", "two-part-2d1",
    "key-prop",      "simple-case", "tdm-formula"};

} // namespace cli_detail

/**
 * In-process entry point: args are the command-line arguments without the
 * program name.  Exit codes: 0 all checks passed, 1 some check failed,
 * 2 usage/parse/input error, 3 size limit exceeded.
 */
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"face-lattice construction and verification toolkit", "polyface"};
    app.require_subcommand(1);

    std::string format_s = "text", out_path, spec, input, check_file, theorem;
    int d_opt = -1, dmax_opt = -1, jobs = 1;
    std::uint64_t seed = default_sample_seed;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_s, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* construct = app.add_subcommand("construct", "build a lattice from a spec");
    construct->add_option("spec", spec, "construction spec, e.g. \"nabla(3)\"")->required();
    construct->add_option("-o,--out", out_path, "write lattice JSON to this file");
    add_format(construct);

    CLI::App* fvector = app.add_subcommand("fvector", "f-vector of a lattice file or spec");
    fvector->add_option("input", input, "lattice JSON file or construction spec")->required();
    add_format(fvector);

    CLI::App* check = app.add_subcommand("check", "run structural checks on a lattice file");
    check->add_option("file", check_file, "lattice JSON file")->required();
    bool f_lattice = false, f_diamond = false, f_coatom = false, f_boolean = false,
         f_pure = false, f_pm = false, f_normal = false, f_grunbaum = false;
    check->add_flag("--lattice", f_lattice, "meet/join existence");
    check->add_flag("--diamond", f_diamond, "diamond property of rank-2 intervals");
    check->add_flag("--coatom-dist", f_coatom, "coatoms distinguish same-rank elements");
    check->add_flag("--boolean-intervals", f_boolean,
                    "Boolean upper intervals and the induced dual complex");
    check->add_flag("--pure", f_pure, "order complex is pure");
    check->add_flag("--pseudomanifold", f_pm, "every ridge lies in exactly two facets");
    check->add_flag("--normal", f_normal, "normal pseudomanifold conditions");
    check->add_flag("--grunbaum", f_grunbaum, "face numbers meet the phi lower bound");
    add_format(check);
    check->add_option("--out", out_path, "write the report stream to this file");

    CLI::App* verify = app.add_subcommand("verify", "verify a named theorem on a sweep");
    verify->add_option("theorem", theorem, "phi-minimizer | ordering | appendix | "
                                           "two-part-2d1 | key-prop | simple-case | tdm-formula")
        ->required();
    verify->add_option("--d", d_opt, "dimension (single-d sweeps)");
    verify->add_option("--dmax", dmax_opt, "dimension cap (range sweeps)");
    verify->add_option("--seed", seed, "sampling seed for randomized subset checks");
    verify->add_option("--jobs", jobs, "parallel tasks for sweeps")->check(CLI::PositiveNumber);
    add_format(verify);
    verify->add_option("--out", out_path, "write the report stream to this file");

    CLI::App* sweep = app.add_subcommand("sweep", "run every theorem at its default grid");
    sweep->add_option("--seed", seed, "sampling seed for randomized subset checks");
    sweep->add_option("--jobs", jobs, "parallel tasks for sweeps")->check(CLI::PositiveNumber);
    add_format(sweep);
    sweep->add_option("--out", out_path, "write the report stream to this file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format format = format_of(format_s);

        if (*construct) {
            const GradedLattice L = realize(spec);
            if (!out_path.empty()) write_json_file(out_path, lattice_to_json(L));
            if (format == Format::json && out_path.empty()) {
                out << lattice_to_json(L).dump(2) << "\n";
            } else if (format == Format::csv) {
                err << "error: construct has no csv form; use fvector for tables\n";
                return 2;
            } else {
                out << "spec: " << spec << "\n"
                    << "rank: " << L.rank() << "\n"
                    << "atoms: " << L.atoms().size() << "\n"
                    << "coatoms: " << L.coatoms().size() << "\n"
                    << "f-vector: " << join_counts(L.f_vector()) << "\n";
                if (!out_path.empty()) out << "written: " << out_path << "\n";
            }
            return 0;
        }

        if (*fvector) {
            const FVector fv = load_lattice_or_spec(input).f_vector();
            if (format == Format::csv) {
                out << join_counts(fv) << "\n";
            } else if (format == Format::json) {
                out << Json{{"dim", fv.dim()}, {"euler", fv.euler()}, {"f", fv.counts}}.dump(2)
                    << "\n";
            } else {
                out << "f-vector: " << join_counts(fv) << "\n"
                    << "euler: " << fv.euler() << "\n";
            }
            return 0;
        }

        if (*check) {
            if (format == Format::csv) {
                err << "error: check reports have no csv form; use text or json\n";
                return 2;
            }
            const GradedLattice L = lattice_from_json(read_json_file(check_file));
            const bool all =
                !(f_lattice || f_diamond || f_coatom || f_boolean || f_pure || f_pm ||
                  f_normal || f_grunbaum);
            VerbOutput result;

            const auto pair_check = [&](const char* name, bool requested, auto predicate) {
                if (!requested && !all) return;
                CheckReport rep;
                rep.check = name;
                PairWitness w;
                if (!predicate(L, &w))
                    rep.fail(name_of(L, w.a) + " / " + name_of(L, w.b) + ": " + w.what);
                result.reports.push_back(std::move(rep));
            };
            pair_check("lattice", f_lattice,
                       [](const GradedLattice& M, PairWitness* w) { return is_lattice(M, w); });
            pair_check("diamond", f_diamond,
                       [](const GradedLattice& M, PairWitness* w) { return is_diamond(M, w); });
            pair_check("coatom-dist", f_coatom, [](const GradedLattice& M, PairWitness* w) {
                return is_coatom_distinguishable(M, w);
            });
            if (f_boolean || all) result.reports.push_back(check_dual_simplicial(L));
            if (f_pure || all) result.reports.push_back(is_pure(order_complex(L)));
            if (f_pm || all) result.reports.push_back(is_pseudomanifold(L));
            if (f_normal || all) result.reports.push_back(is_normal_pseudomanifold(L));
            if (f_grunbaum || all) {
                try {
                    result.reports.push_back(verify_grunbaum(L));
                } catch (const PreconditionViolated& e) {
                    CheckReport rep;
                    rep.check = "grunbaum";
                    rep.fail(std::string("precondition: ") + e.what());
                    result.reports.push_back(std::move(rep));
                }
            }
            emit(result, format, out_path, out);
            return result.all_passed() ? 0 : 1;
        }

        if (*verify) {
            const VerbOutput result =
                run_theorem(theorem, d_opt, dmax_opt, seed, jobs, format == Format::csv);
            emit(result, format, out_path, out);
            return result.all_passed() ? 0 : 1;
        }

        if (*sweep) {
            VerbOutput result;
            for (const char* name : all_theorems)
                result.absorb(run_theorem(name, -1, -1, seed, jobs, format == Format::csv));
            emit(result, format, out_path, out);
            return result.all_passed() ? 0 : 1;
        }
    } catch (const SizeLimit& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(std::move(args), out, err);
}

} // namespace polyface
