// sictool: verify, construct and search state-independent contextuality sets.
//
// Exit codes: 0 property holds / success, 1 property refuted, 2 usage or
// input error, 3 undecided (budget exhausted).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sic/contextuality.hpp"
#include "sic/report.hpp"

namespace {

constexpr int exit_holds = 0;
constexpr int exit_refuted = 1;
constexpr int exit_input_error = 2;
constexpr int exit_undecided = 3;

struct InputOptions {
    std::string path;
    std::string dedup = "merge";
};

struct CommonOptions {
    bool json = false;
    std::optional<double> budget_seconds;

    sic::Budget budget() const
    {
        return budget_seconds ? sic::Budget::seconds(*budget_seconds) : sic::Budget::unlimited();
    }
};

// `catalog:<name>` selects a built-in set; anything else is a ray file path.
sic::RaySet load_input(const InputOptions& in)
{
    const auto policy = in.dedup == "reject" ? sic::DedupPolicy::reject : sic::DedupPolicy::merge;
    constexpr std::string_view prefix = "catalog:";
    if (in.path.starts_with(prefix))
        return sic::catalog_get(std::string_view(in.path).substr(prefix.size()));
    return sic::load_rayset(in.path, policy);
}

void add_input(CLI::App* cmd, InputOptions& in)
{
    cmd->add_option("file", in.path, "Ray file, or catalog:<name>")->required();
    cmd->add_option("--dedup", in.dedup, "Projective duplicates: merge or reject")
        ->check(CLI::IsMember({"merge", "reject"}));
}

void add_common(CLI::App* cmd, CommonOptions& common, bool with_budget = true)
{
    cmd->add_flag("--json", common.json, "Emit a JSON report");
    if (with_budget)
        cmd->add_option("--budget", common.budget_seconds, "Wall-clock budget in seconds")
            ->check(CLI::PositiveNumber);
}

void emit(const CommonOptions& common, const nlohmann::json& j, const std::string& text)
{
    if (common.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification and construction of state-independent contextuality sets"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    InputOptions input;
    CommonOptions common;

    auto* verify = app.add_subcommand("verify", "Decide whether a ray set proves SIC and/or is a KS set");
    bool want_sic = false;
    bool want_ks = false;
    bool exclusivity = false;
    add_input(verify, input);
    add_common(verify, common);
    verify->add_flag("--sic", want_sic, "Query the SIC property (default)");
    verify->add_flag("--ks", want_ks, "Query the KS property");
    verify->add_flag("--exclusivity", exclusivity, "Also forbid value 1 on both ends of any orthogonal pair");

    auto* construct = app.add_subcommand("construct", "Write the d + 10 ray SIC set for dimension d");
    std::size_t construct_dim = 0;
    std::string out_path;
    construct->add_option("--dim", construct_dim, "Target dimension (>= 3)")->required();
    construct->add_option("-o,--output", out_path, "Output ray file (default: stdout)");
    add_common(construct, common, false);

    auto* invariants = app.add_subcommand("invariants", "Graph invariants of the orthogonality graph");
    std::string edges_path;
    add_input(invariants, input);
    add_common(invariants, common);
    invariants->add_option("--edges", edges_path, "Also write the graph as an edge list");

    auto* bases = app.add_subcommand("bases", "List the orthogonal bases contained in the set");
    add_input(bases, input);
    add_common(bases, common, false);

    auto* search = app.add_subcommand("search", "Smallest SIC subset within a size range");
    std::size_t k_min = 1;
    std::size_t k_max = 0;
    add_input(search, input);
    add_common(search, common);
    search->add_option("--min", k_min, "Smallest subset size")->required();
    search->add_option("--max", k_max, "Largest subset size")->required();

    auto* table = app.add_subcommand("table", "Regenerate the minimum SIC / KS set table");
    std::size_t d_from = 3;
    std::size_t d_to = 8;
    table->add_option("--from", d_from, "First dimension")->capture_default_str();
    table->add_option("--to", d_to, "Last dimension")->capture_default_str();
    add_common(table, common);

    auto* catalog = app.add_subcommand("catalog", "Built-in ray sets");
    catalog->require_subcommand(1);
    auto* catalog_list = catalog->add_subcommand("list", "List catalog entries");
    auto* catalog_get = catalog->add_subcommand("get", "Print a catalog entry as a ray file");
    std::string catalog_name;
    catalog_get->add_option("name", catalog_name)->required();
    add_common(catalog_list, common, false);
    add_common(catalog_get, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        const sic::Budget budget = common.budget();

        if (*verify) {
            if (!want_sic && !want_ks)
                want_sic = true;
            const sic::RaySet s = load_input(input);
            const sic::Verdict v = sic::analyze(
                s, {.name = input.path, .ks = want_ks, .exclusivity = exclusivity, .budget = budget});
            emit(common, sic::to_json(v), sic::to_text(v));
            bool holds = true;
            if (want_sic)
                holds = holds && v.is_sic;
            if (want_ks)
                holds = holds && v.is_ks.value_or(false);
            return holds ? exit_holds : exit_refuted;
        }

        if (*construct) {
            if (construct_dim < 3) {
                std::cerr << "error: --dim must be at least 3\n";
                return exit_input_error;
            }
            const sic::RaySet s = sic::construct_sic_set(construct_dim);
            std::string text = "# " + std::to_string(s.size()) + "-ray SIC set in dimension "
                + std::to_string(construct_dim) + ": yu-oh-13";
            if (construct_dim > 3)
                text += " embedded, plus e_4..e_" + std::to_string(construct_dim);
            text += "\n" + sic::serialize_rayset(s);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!(out << text)) {
                    std::cerr << "error: cannot write '" << out_path << "'\n";
                    return exit_input_error;
                }
                const nlohmann::json j{{"dim", s.dim()}, {"rays", s.size()}, {"output", out_path}};
                emit(common, j, "wrote " + std::to_string(s.size()) + " rays to " + out_path + "\n");
            }
            return exit_holds;
        }

        if (*invariants) {
            const sic::RaySet s = load_input(input);
            const sic::Verdict v = sic::analyze(
                s, {.name = input.path, .ks = true, .exclusivity = false, .budget = budget});
            if (!edges_path.empty()) {
                std::ofstream out(edges_path, std::ios::binary);
                if (!(out << sic::write_edge_list(sic::build_graph(s)))) {
                    std::cerr << "error: cannot write '" << edges_path << "'\n";
                    return exit_input_error;
                }
            }
            emit(common, sic::to_json(v), sic::to_text(v));
            return exit_holds;
        }

        if (*bases) {
            const sic::RaySet s = load_input(input);
            const auto list = sic::enumerate_bases(sic::build_graph(s), s.dim());
            emit(common, sic::bases_to_json(s, list), sic::bases_to_text(s, list));
            return exit_holds;
        }

        if (*search) {
            const sic::RaySet s = load_input(input);
            const auto r = sic::minimal_subset_search(s, k_min, k_max, budget);
            emit(common, sic::to_json(r), sic::to_text(r));
            return r.subset ? exit_holds : exit_refuted;
        }

        if (*table) {
            const auto report = sic::table_report(d_from, d_to, budget);
            emit(common, sic::to_json(report), sic::to_text(report));
            return report.all_verified() ? exit_holds : exit_refuted;
        }

        if (*catalog_list) {
            nlohmann::json j = nlohmann::json::array();
            std::string text;
            for (const auto& e : sic::catalog()) {
                j.push_back({{"name", e.name},
                             {"dim", e.dim},
                             {"rays", e.ray_count},
                             {"chromatic_number", e.expected.chromatic_number},
                             {"is_sic", e.expected.is_sic},
                             {"is_ks", e.expected.is_ks},
                             {"provenance", e.provenance}});
                text += e.name + "  dim " + std::to_string(e.dim) + ", " + std::to_string(e.ray_count)
                    + " rays  -- " + e.provenance + "\n";
            }
            emit(common, j, text);
            return exit_holds;
        }

        if (*catalog_get) {
            const auto& e = sic::catalog_entry(catalog_name);
            const nlohmann::json j{{"name", e.name},
                                   {"dim", e.dim},
                                   {"sqrt", e.sqrt_base},
                                   {"text", sic::serialize_rayset(e.rays())}};
            emit(common, j, std::string(e.text));
            return exit_holds;
        }
    } catch (const sic::BudgetExceeded& e) {
        std::cerr << "undecided: " << e.what() << '\n';
        return exit_undecided;
    } catch (const sic::ParseError& e) {
        std::cerr << "parse error: " << input.path << ": " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}
