// Command-line front end: validate/inspect spaces, run the deciders, build
// sums/products/subspaces, drive the theorem suite and counterexample search.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcs/constructions.hpp"
#include "fcs/corpus.hpp"
#include "fcs/enumerate_spaces.hpp"
#include "fcs/errors.hpp"
#include "fcs/io.hpp"
#include "fcs/search.hpp"
#include "fcs/separation.hpp"
#include "fcs/suite.hpp"
#include "fcs/topology.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fcs::StructuralError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fcs::StructuralError("cannot write " + path);
    out << content;
}

void emit(const fcs::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Cech-style fuzzy closure spaces: operators, separation "
                 "axioms, constructions, and a theorem harness"};
    app.require_subcommand(1);

    std::string file, set_expr, elements, map_file, report_path, out_path;
    std::vector<std::string> files;
    std::string example_name, property;
    int opt_n = -1, opt_d = -1;

    fcs::SuiteConfig suite_cfg;
    bool serial = false;
    int threads = 0;

    fcs::SearchBounds bounds;

    auto* validate_cmd = app.add_subcommand("validate", "check the closure axioms of a document");
    validate_cmd->add_option("file", file)->required();

    auto* closure_cmd = app.add_subcommand("closure", "closure of a fuzzy set");
    closure_cmd->add_option("file", file)->required();
    closure_cmd->add_option("--set", set_expr, "JSON memberships, or 0 / 1")->required();

    auto* interior_cmd = app.add_subcommand("interior", "interior of a fuzzy set");
    interior_cmd->add_option("file", file)->required();
    interior_cmd->add_option("--set", set_expr)->required();

    auto* classify_cmd = app.add_subcommand("classify", "decide every separation axiom");
    classify_cmd->add_option("file", file)->required();

    auto* topology_cmd = app.add_subcommand("topology", "associated fuzzy topology");
    topology_cmd->add_option("file", file)->required();

    auto* continuity_cmd = app.add_subcommand("continuity", "continuity of a map document");
    continuity_cmd->add_option("map-file", map_file)->required();

    auto* homeo_cmd = app.add_subcommand("homeo", "homeomorphism check of a map document");
    homeo_cmd->add_option("map-file", map_file)->required();

    auto* sum_cmd = app.add_subcommand("sum", "disjoint sum of spaces");
    sum_cmd->add_option("files", files)->required()->expected(-1);

    auto* product_cmd = app.add_subcommand("product", "finite product of spaces");
    product_cmd->add_option("files", files)->required()->expected(-1);

    auto* subspace_cmd = app.add_subcommand("subspace", "restrict to a subset of elements");
    subspace_cmd->add_option("file", file)->required();
    subspace_cmd->add_option("--elements", elements, "comma-separated element names")->required();

    auto* suite_cmd = app.add_subcommand("suite", "run the theorem suite");
    suite_cmd->add_option("--exhaustive-n", suite_cfg.exhaustive_n);
    suite_cmd->add_option("--exhaustive-d", suite_cfg.exhaustive_d);
    suite_cmd->add_option("--random-n", suite_cfg.random_n);
    suite_cmd->add_option("--random-d", suite_cfg.random_d);
    suite_cmd->add_option("--samples", suite_cfg.samples);
    suite_cmd->add_option("--seed", suite_cfg.seed);
    suite_cmd->add_option("--report", report_path, "write the report JSON here");
    suite_cmd->add_option("--theorems", suite_cfg.theorems, "subset of theorem names");
    suite_cmd->add_flag("--serial", serial, "single-threaded reference run");
    suite_cmd->add_option("--threads", threads, "worker threads (0 = all)");

    auto* search_cmd = app.add_subcommand("search", "hunt a counterexample to an implication");
    search_cmd->add_option("--property", property)->required();
    search_cmd->add_option("--max-n", bounds.max_n);
    search_cmd->add_option("--max-d", bounds.max_d);
    search_cmd->add_flag("--tables", bounds.include_tables, "also scan table operators");
    search_cmd->add_option("--out", out_path, "write the witness document here");
    search_cmd->add_flag("--serial", serial);
    search_cmd->add_option("--threads", threads);

    auto* example_cmd = app.add_subcommand("example", "emit a named example space");
    example_cmd->add_option("--name", example_name)->required();
    example_cmd->add_option("--n", opt_n);
    example_cmd->add_option("--d", opt_d);

    auto* theorems_cmd = app.add_subcommand("theorems", "list suite theorems and search properties");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) {
            try {
                fcs::FuzzyClosureSpace s = fcs::parse_space(read_file(file));
                emit(fcs::validation_report_to_json(s.validation()));
                return kExitHolds;
            } catch (const fcs::ValidationError& e) {
                emit(fcs::validation_report_to_json(e.report));
                return kExitFails;
            }
        }
        if (*closure_cmd || *interior_cmd) {
            const fcs::FuzzyClosureSpace s = fcs::parse_space(read_file(file));
            const fcs::FuzzySet f = fcs::parse_set_expression(set_expr, s.universe(), s.chain());
            emit(fcs::fuzzy_set_to_json(*closure_cmd ? s.closure(f) : s.interior(f)));
            return kExitHolds;
        }
        if (*classify_cmd) {
            const fcs::FuzzyClosureSpace s = fcs::parse_space(read_file(file));
            emit(fcs::separation_report_to_json(fcs::classify(s)));
            return kExitHolds;
        }
        if (*topology_cmd) {
            const fcs::FuzzyClosureSpace s = fcs::parse_space(read_file(file));
            const fcs::FuzzyTopology t = s.associated_topology();
            fcs::ordered_json out;
            out["open_count"] = t.opens().size();
            fcs::ordered_json opens = fcs::ordered_json::array();
            for (const auto& o : t.opens()) opens.push_back(fcs::fuzzy_set_to_json(o));
            out["opens"] = std::move(opens);
            out["chang_valid"] = t.validated();
            emit(out);
            return kExitHolds;
        }
        if (*continuity_cmd || *homeo_cmd) {
            const fcs::SpaceMap m = fcs::parse_map(read_file(map_file));
            const fcs::Verdict v =
                *continuity_cmd ? fcs::is_cf_continuous(m) : fcs::is_cf_homeomorphism(m);
            emit(fcs::verdict_to_json(v));
            return v.holds ? kExitHolds : kExitFails;
        }
        if (*sum_cmd || *product_cmd) {
            std::vector<fcs::FuzzyClosureSpace> spaces;
            for (const auto& path : files) spaces.push_back(fcs::parse_space(read_file(path)));
            const fcs::FuzzyClosureSpace result =
                *sum_cmd ? fcs::sum(spaces) : fcs::product(spaces).space;
            std::cout << fcs::serialize_space(result);
            return kExitHolds;
        }
        if (*subspace_cmd) {
            const fcs::FuzzyClosureSpace s = fcs::parse_space(read_file(file));
            std::cout << fcs::serialize_space(fcs::subspace(s, split_csv(elements)));
            return kExitHolds;
        }
        if (*suite_cmd) {
            suite_cfg.policy.parallel = !serial;
            suite_cfg.policy.threads = threads;
            const fcs::SuiteReport report = fcs::run_theorem_suite(suite_cfg);
            for (const auto& r : report.results)
                std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.name << "  (" << r.instances
                          << " instances, " << static_cast<long long>(r.wall_ms) << " ms)\n";
            const std::string text = fcs::suite_report_to_json(report).dump(2) + "\n";
            if (report_path.empty()) std::cout << text;
            else write_file(report_path, text);
            return report.passed ? kExitHolds : kExitFails;
        }
        if (*search_cmd) {
            fcs::ExecPolicy policy;
            policy.parallel = !serial;
            policy.threads = threads;
            const fcs::SearchOutcome outcome =
                fcs::search_counterexample(property, bounds, policy);
            fcs::ordered_json out;
            out["property"] = outcome.property;
            out["found"] = outcome.found;
            out["spaces_checked"] = outcome.spaces_checked;
            out["max_n"] = outcome.bounds.max_n;
            out["max_d"] = outcome.bounds.max_d;
            if (outcome.witness) out["witness"] = *outcome.witness;
            const std::string text = out.dump(2) + "\n";
            if (out_path.empty()) std::cout << text;
            else write_file(out_path, text);
            // A witness disproves the implication: exit 1 with it written.
            return outcome.found ? kExitFails : kExitHolds;
        }
        if (*example_cmd) {
            fcs::corpus::ExampleId id;
            id.name = example_name;
            if (opt_n >= 0) id.n = opt_n;
            if (opt_d >= 0) id.d = opt_d;
            std::cout << fcs::serialize_space(fcs::corpus::build_example(id));
            return kExitHolds;
        }
        if (*theorems_cmd) {
            fcs::ordered_json out;
            out["theorems"] = fcs::theorem_names();
            out["search_properties"] = fcs::search_property_names();
            emit(out);
            return kExitHolds;
        }
    } catch (const fcs::ResourceError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const fcs::ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        std::cout << fcs::validation_report_to_json(e.report).dump(2) << "\n";
        return kExitInput;
    } catch (const fcs::StructuralError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
