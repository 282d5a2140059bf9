#include "sic/report.hpp"

#include <iomanip>
#include <sstream>

namespace sic {

namespace {

using nlohmann::json;

template <typename T>
std::string join(const std::vector<T>& values)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? " " : "") << +values[i];
    return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void line(std::ostringstream& out, const std::string& key, const auto& value)
{
    out << std::left << std::setw(21) << (key + ":") << value << '\n';
}

} // namespace

json to_json(const Verdict& v)
{
    json witness = json::object();
    witness["coloring"] = {{"k", v.coloring.k}, {"colors", v.coloring.colors}};
    witness["clique"] = v.clique_witness;
    witness["independent_set"] = v.independent_witness;
    if (v.ks_assignment)
        witness["ks_assignment"] = v.ks_assignment->values;
    else
        witness["ks_assignment"] = nullptr;
    witness["note"] = v.note;

    return {
        {"name", v.name},
        {"hash", v.hash},
        {"dim", v.dim},
        {"rays", v.rays},
        {"edges", v.edges},
        {"bases", v.bases},
        {"chromatic_number", v.chromatic_number},
        {"clique_number", v.clique_number},
        {"independence_number", v.independence_number},
        {"is_sic", v.is_sic},
        {"is_ks", v.is_ks ? json(*v.is_ks) : json(nullptr)},
        {"exclusivity", v.exclusivity},
        {"vacuous_ks", v.vacuous_ks},
        {"witness", witness},
        {"elapsed_ms", v.elapsed_ms},
    };
}

std::string to_text(const Verdict& v)
{
    std::ostringstream out;
    line(out, "set", (v.name.empty() ? std::string("<unnamed>") : v.name) + " [" + v.hash + "]");
    line(out, "dim", v.dim);
    line(out, "rays", v.rays);
    line(out, "edges", v.edges);
    line(out, "bases", v.bases);
    line(out, "chromatic_number", v.chromatic_number);
    line(out, "clique_number", v.clique_number);
    line(out, "independence_number", v.independence_number);
    line(out, "is_sic", yes_no(v.is_sic));
    if (v.is_ks) {
        line(out, "is_ks", yes_no(*v.is_ks));
        line(out, "vacuous_ks", yes_no(v.vacuous_ks));
        if (v.exclusivity)
            line(out, "exclusivity", "on");
    }
    line(out, "coloring", join(v.coloring.colors));
    line(out, "clique", join(v.clique_witness));
    if (v.ks_assignment)
        line(out, "ks_assignment", join(v.ks_assignment->values));
    line(out, "note", v.note);
    line(out, "elapsed_ms", v.elapsed_ms);
    return out.str();
}

json to_json(const TableReport& t)
{
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back({
            {"dim", r.dim},
            {"rays", r.rays},
            {"chromatic_number", r.chromatic_number},
            {"is_sic", r.is_sic},
            {"size_matches", r.size_matches},
            {"chromatic_matches", r.chromatic_matches},
            {"sic_cited", r.sic_cited},
            {"sic_status", r.sic_status},
            {"ks_cited", r.ks_cited},
            {"ks_status", r.ks_status},
            {"ks_verified", r.ks_verified},
        });
    }
    return {{"rows", rows}, {"all_verified", t.all_verified()}};
}

std::string to_text(const TableReport& t)
{
    std::ostringstream out;
    out << std::left << std::setw(5) << "dim" << std::setw(6) << "rays" << std::setw(5) << "chi"
        << std::setw(5) << "SIC" << std::setw(16) << "min SIC (cited)" << std::setw(16)
        << "min KS (cited)" << "status\n";
    for (const auto& r : t.rows) {
        out << std::left << std::setw(5) << r.dim << std::setw(6) << r.rays << std::setw(5)
            << r.chromatic_number << std::setw(5) << yes_no(r.is_sic) << std::setw(16) << r.sic_cited
            << std::setw(16) << r.ks_cited << r.sic_status << " | KS: " << r.ks_status << '\n';
    }
    return out.str();
}

json to_json(const SubsetSearchResult& r)
{
    json out{{"k_min", r.k_min}, {"k_max", r.k_max}, {"subsets_examined", r.subsets_examined}};
    if (r.subset) {
        out["status"] = "found";
        out["subset"] = *r.subset;
        out["verdict"] = to_json(*r.verdict);
    } else {
        out["status"] = "exhausted";
        out["subset"] = nullptr;
        out["verdict"] = nullptr;
    }
    return out;
}

std::string to_text(const SubsetSearchResult& r)
{
    std::ostringstream out;
    line(out, "k_range", std::to_string(r.k_min) + ".." + std::to_string(r.k_max));
    line(out, "subsets_examined", r.subsets_examined);
    if (!r.subset) {
        line(out, "status", "exhausted (no SIC subset up to size " + std::to_string(r.k_max) + ")");
        return out.str();
    }
    line(out, "status", "found");
    line(out, "subset", join(*r.subset));
    out << to_text(*r.verdict);
    return out.str();
}

json bases_to_json(const RaySet& s, const std::vector<Basis>& bases)
{
    json list = json::array();
    for (const auto& b : bases)
        list.push_back(b);
    return {{"dim", s.dim()}, {"rays", s.size()}, {"count", bases.size()}, {"bases", list}};
}

std::string bases_to_text(const RaySet& s, const std::vector<Basis>& bases)
{
    std::ostringstream out;
    line(out, "dim", s.dim());
    line(out, "rays", s.size());
    line(out, "count", bases.size());
    for (const auto& b : bases) {
        out << "basis";
        for (auto v : b)
            out << ' ' << v;
        out << "   #";
        for (auto v : b) {
            out << " (";
            const auto& comps = s[v].components();
            for (std::size_t k = 0; k < comps.size(); ++k)
                out << (k ? "," : "") << comps[k];
            out << ')';
        }
        out << '\n';
    }
    return out.str();
}

} // namespace sic
