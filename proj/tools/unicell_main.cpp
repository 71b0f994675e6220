#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "unicell/dot.hpp"
#include "unicell/equivalence.hpp"
#include "unicell/io.hpp"
#include "unicell/oracles.hpp"
#include "unicell/span.hpp"
#include "unicell/universality.hpp"
#include "unicell/validate.hpp"

namespace fs = std::filesystem;
using namespace unicell;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kShallow = 3 };

// A JSON file, or the name of a built-in fixture.
OpetopicSet load_input(const std::string& input) {
    if (fs::exists(input)) return opetopic_set_from_json(read_json_file(input));
    for (const auto& name : fixture_names())
        if (name == input) return fixture(name);
    throw DataError("'" + input + "' is neither a readable file nor a fixture name");
}

FiniteCategory load_category(const std::string& input) {
    if (fs::exists(input)) return category_from_json(read_json_file(input));
    return named_category(input);
}

std::string bounds_line(const FragmentBounds& b) {
    std::string s = "fragment: D = " + std::to_string(b.truncation) + ", D_v = " + std::to_string(b.virtual_ceiling);
    if (b.enumeration_bound) s += ", niche bound = " + std::to_string(b.enumeration_bound);
    return s;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << text;
}

std::string witness_text(const UniversalityReport& r) {
    for (const auto& t : r.trace) {
        if (t.verdict) continue;
        if (t.detail.rfind("no factorisation", 0) == 0) return "witness γ = " + t.object;
        return "witness " + t.object + ": " + t.detail;
    }
    return "no witness recorded";
}

void print_report(const UniversalityReport& r, const std::string& label) {
    std::cout << r.subject << ": " << (r.verdict ? label : "not " + label);
    if (!r.verdict) std::cout << "; " << witness_text(r);
    std::cout << " (n = " << r.n << ")\n";
    for (const auto& t : r.trace)
        std::cout << "  [dim " << t.dimension << "] " << t.object << ": " << (t.verdict ? "ok" : "FAIL") << " - "
                  << t.detail << "\n";
    std::cout << bounds_line(r.bounds) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal cells in finite truncated opetopic sets"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Structured output");

    std::string input, cell, target, out_path, variant = "on_the_nose", dims_arg = "1";
    int n = 1, max_level = 1, trace_depth = 2;
    bool naive = false, literal = false, factorisation = false, list = false;
    int L = 2, D = 3, Dv = 6, tree_bound = 3;

    auto* validate_cmd = app.add_subcommand("validate", "Check referential integrity and frame conditions");
    validate_cmd->add_option("input", input, "JSON file or fixture name")->required();

    auto* universal_cmd = app.add_subcommand("universal", "Decide n-universality of a cell (P1)");
    universal_cmd->add_option("input", input, "JSON file or fixture name")->required();
    universal_cmd->add_option("--cell", cell)->required();
    universal_cmd->add_option("--n", n)->required();
    universal_cmd->add_flag("--factorisation", factorisation, "Check the cell as a factorisation");
    universal_cmd->add_flag("--naive", naive, "Disable memoization");
    universal_cmd->add_flag("--all-factorisations", literal,
                            "Quantify over all factorisations, not only universal ones");
    universal_cmd->add_option("--trace-depth", trace_depth);

    auto* axioms_cmd = app.add_subcommand("axioms", "Check the n-category axioms");
    axioms_cmd->add_option("input", input, "JSON file or fixture name")->required();
    axioms_cmd->add_option("--n", n)->required();

    auto* span_cmd = app.add_subcommand("span", "Build the composition span of a cell");
    span_cmd->add_option("input", input, "JSON file or fixture name")->required();
    span_cmd->add_option("--cell", cell)->required();
    span_cmd->add_option("--target", target, "The (k-1)-cell c")->required();
    span_cmd->add_option("--n", n)->required();
    span_cmd->add_option("--max-level", max_level);

    auto* p2_cmd = app.add_subcommand("p2", "Decide span-based universality (P2)");
    p2_cmd->add_option("input", input, "JSON file or fixture name")->required();
    p2_cmd->add_option("--cell", cell)->required();
    p2_cmd->add_option("--n", n)->required();
    p2_cmd->add_option("--variant", variant)->check(CLI::IsMember({"on_the_nose", "equivalence"}));

    auto* compare_cmd = app.add_subcommand("compare", "Compare P1 and P2 on every cell of some dimensions");
    compare_cmd->add_option("input", input, "JSON file or fixture name")->required();
    compare_cmd->add_option("--n", n)->required();
    compare_cmd->add_option("--dims", dims_arg, "Comma-separated dimensions");

    auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a finite category");
    nerve_cmd->add_option("input", input, "Category JSON file or corpus name")->required();
    nerve_cmd->add_option("-L", L, "Longest composable string");
    nerve_cmd->add_option("-D", D, "Materialized truncation");
    nerve_cmd->add_option("--Dv", Dv, "Virtual ceiling");
    nerve_cmd->add_option("--tree-bound", tree_bound, "Node bound for materialized fillers");
    nerve_cmd->add_option("-o,--out", out_path);

    auto* category_cmd = app.add_subcommand("category", "Emit a corpus category as JSON");
    category_cmd->add_option("name", input);
    category_cmd->add_flag("--list", list);
    category_cmd->add_option("-o,--out", out_path);

    auto* fixture_cmd = app.add_subcommand("fixture", "Emit a built-in fixture");
    fixture_cmd->add_option("name", input);
    fixture_cmd->add_flag("--list", list);
    fixture_cmd->add_option("-o,--out", out_path);

    auto* dot_cmd = app.add_subcommand("export-dot", "DOT rendering of a cell's source tree");
    dot_cmd->add_option("input", input, "JSON file or fixture name")->required();
    dot_cmd->add_option("--cell", cell)->required();
    dot_cmd->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kTrue : kUsage;
    }

    try {
        if (*validate_cmd) {
            const auto x = load_input(input);
            const auto r = validate(x);
            if (json) {
                std::cout << to_json(r).dump(2) << "\n";
            } else if (r.ok()) {
                std::cout << x.name() << ": valid (" << x.cells().size() << " cells)\n";
            } else {
                for (const auto& v : r.violations) std::cout << v.path << ": " << v.message << "\n";
                std::cout << r.violations.size() << " violation(s)\n";
            }
            return r.ok() ? kTrue : kFalse;
        }
        if (*universal_cmd) {
            const auto x = load_input(input);
            UniversalityOptions opt;
            opt.memoize = !naive;
            opt.universal_factorisers = !literal;
            opt.trace_depth = trace_depth;
            UniversalityChecker chk(x, opt);
            const auto r = factorisation ? chk.is_universal_factorisation(cell, n) : chk.is_universal_cell(cell, n);
            if (json)
                std::cout << to_json(r).dump(2) << "\n";
            else
                print_report(r, "universal");
            return r.verdict ? kTrue : kFalse;
        }
        if (*axioms_cmd) {
            const auto x = load_input(input);
            const auto r = check_n_category(x, n);
            if (json) {
                std::cout << to_json(r).dump(2) << "\n";
            } else {
                std::cout << x.name() << ": axiom (i) " << (r.axiom_i ? "holds" : "FAILS") << " on "
                          << r.niches_checked << " niches, axiom (ii) " << (r.axiom_ii ? "holds" : "FAILS") << " on "
                          << r.composites_checked << " composites (n = " << n << ")\n";
                for (const auto& v : r.violations)
                    std::cout << "  axiom (" << (v.axiom == 1 ? "i" : "ii") << ") dim " << v.dimension << " "
                              << v.object << ": " << v.detail << "\n";
                std::cout << bounds_line(r.bounds) << "\n";
            }
            return r.ok() ? kTrue : kFalse;
        }
        if (*span_cmd) {
            const auto x = load_input(input);
            const auto s = build_span(x, cell, target, n, max_level, span_options_from_env());
            if (json) {
                std::cout << to_json(s).dump(2) << "\n";
            } else {
                std::cout << "span of " << cell << " over " << target << " (k = " << s.k << ", n = " << n << ")\n";
                std::cout << "level  tuples  components\n";
                for (std::size_t j = 0; j < s.levels.size(); ++j)
                    std::cout << std::setw(5) << j << "  " << std::setw(6) << s.levels[j].size() << "  "
                              << (std::size_t{1} << j) << "\n";
                for (const auto& r : s.rejections)
                    std::cout << "rejected at level " << r.level << " (" << r.components.front() << ", ...): "
                              << r.reason << "\n";
                std::cout << bounds_line(s.bounds) << "\n";
            }
            return kTrue;
        }
        if (*p2_cmd) {
            const auto x = load_input(input);
            const auto r = is_p2_universal(x, cell, n, parse_variant(variant), span_options_from_env());
            if (json) {
                auto j = to_json(r);
                j["variant"] = variant;
                std::cout << j.dump(2) << "\n";
            } else {
                print_report(r, "P2-universal (" + variant + ")");
            }
            return r.verdict ? kTrue : kFalse;
        }
        if (*compare_cmd) {
            const auto x = load_input(input);
            std::set<int> dims;
            std::stringstream ss(dims_arg);
            for (std::string tok; std::getline(ss, tok, ',');) {
                try {
                    dims.insert(std::stoi(tok));
                } catch (const std::exception&) {
                    throw DataError("bad dimension list '" + dims_arg + "'");
                }
            }
            const auto r = compare_p1_p2(x, n, dims, span_options_from_env());
            if (json)
                std::cout << to_json(r).dump(2) << "\n";
            else
                std::cout << to_table(r) << bounds_line(r.bounds) << "\n";
            return r.all_agree() ? kTrue : kFalse;
        }
        if (*nerve_cmd) {
            const auto c = load_category(input);
            const auto x = nerve_of_category(c, NerveOptions{L, D, Dv, tree_bound});
            emit(to_json(x).dump(2) + "\n", out_path);
            return kTrue;
        }
        if (*category_cmd) {
            if (list || input.empty()) {
                for (const auto& name : corpus_names()) std::cout << name << "\n";
                return kTrue;
            }
            emit(to_json(named_category(input)).dump(2) + "\n", out_path);
            return kTrue;
        }
        if (*fixture_cmd) {
            if (list || input.empty()) {
                for (const auto& name : fixture_names()) std::cout << name << "\n";
                return kTrue;
            }
            emit(to_json(fixture(input)).dump(2) + "\n", out_path);
            return kTrue;
        }
        if (*dot_cmd) {
            const auto x = load_input(input);
            emit(export_dot(x, cell), out_path);
            return kTrue;
        }
    } catch (const FragmentTooShallow& e) {
        std::cerr << "fragment too shallow: " << e.what() << "\n";
        return kShallow;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
