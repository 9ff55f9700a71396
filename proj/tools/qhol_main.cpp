#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qhol/cobordism.hpp"
#include "qhol/report.hpp"
#include "qhol/version.hpp"

namespace {

using namespace qhol;
namespace fs = std::filesystem;

struct IntRange {
    int lo = 0, hi = 0;
};

IntRange parse_range(const std::string& text) {
    auto parse_int = [&](std::string_view part, size_t offset) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw std::invalid_argument(fmt::format(
                "bad range '{}': expected an integer at position {}", text, offset));
        return value;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text, 0);
        return IntRange{v, v};
    }
    IntRange range;
    range.lo = parse_int(std::string_view(text).substr(0, dots), 0);
    range.hi = parse_int(std::string_view(text).substr(dots + 2), dots + 2);
    if (range.lo > range.hi)
        throw std::invalid_argument(
            fmt::format("bad range '{}': lower bound exceeds upper bound", text));
    return range;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty())
                names.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty())
        names.push_back(std::move(current));
    if (names.empty())
        throw std::invalid_argument("empty singularity list");
    return names;
}

std::string default_data_file(const char* argv0, const std::string& name) {
    std::error_code ec;
    fs::path exe = fs::canonical("/proc/self/exe", ec);
    if (ec)
        exe = fs::absolute(argv0 ? argv0 : ".", ec);
    const fs::path dir = exe.parent_path();
    for (const fs::path& candidate : {dir / "data" / name, dir / ".." / "data" / name})
        if (fs::exists(candidate, ec))
            return candidate.string();
    return (dir / "data" / name).string();
}

struct Session {
    std::string format_text = "human";
    std::string registry_path;
    std::string stems_path;
    bool registry_used = false;
    bool stems_used = false;

    Registry registry() {
        registry_used = true;
        return Registry::with_config(registry_path);
    }
    StemTable stems() {
        stems_used = true;
        return StemTable::load_file(stems_path);
    }

    int finish(Report report, const std::string& subcommand, Json inputs) {
        report.inputs = std::move(inputs);
        report.inputs["subcommand"] = subcommand;
        report.meta["tool"] = std::string(tool_name);
        report.meta["version"] = std::string(tool_version);
        report.meta["format"] = format_text;
        if (registry_used)
            report.meta["registry"] =
                Json{{"path", registry_path}, {"digest", file_digest(registry_path)}};
        if (stems_used)
            report.meta["stems"] =
                Json{{"path", stems_path}, {"digest", file_digest(stems_path)}};
        std::cout << emit_report(report, parse_format(format_text));
        return 0;
    }
};

std::string group_or_dash(const FgAbelianGroup& g) {
    if (g.torsion().empty())
        return "-";
    std::string out;
    for (const Int& d : g.torsion()) {
        if (!out.empty())
            out += ",";
        out += "Z_" + d.str();
    }
    return out;
}

int run_rank(Session& session, const std::string& sigma_text, int k,
             const std::string& n_text) {
    const std::vector<std::string> names = split_names(sigma_text);
    const IntRange n_range = parse_range(n_text);
    const Registry registry = session.registry();
    const std::vector<SingularityClass> sigma = registry.resolve_all(names, k);
    const std::vector<std::string> warnings = registry.downward_closure_warnings(sigma, k);

    std::string sigma_joined;
    for (const std::string& n : names)
        sigma_joined += (sigma_joined.empty() ? "" : "+") + n;

    Report report;
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table{{"n", "rank"}};
    std::vector<std::vector<std::string>> csv{{"n", "k", "sigma", "rank"}};
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        const RankResult result = rational_rank(sigma, n, k);
        Json contributions = Json::array();
        for (const RankContribution& c : result.contributions) {
            contributions.push_back(Json{{"eta", c.name},
                                         {"codim", c.codim},
                                         {"degree", c.degree},
                                         {"coefficient", json_int(c.coefficient)}});
            report.trace.push_back(Json{{"n", n},
                                        {"eta", c.name},
                                        {"codim", c.codim},
                                        {"degree", c.degree},
                                        {"coefficient", json_int(c.coefficient)}});
        }
        rows.push_back(Json{{"n", n}, {"rank", json_int(result.rank)},
                            {"contributions", contributions}});
        table.push_back({std::to_string(n), result.rank.str()});
        csv.push_back({std::to_string(n), std::to_string(k), sigma_joined, result.rank.str()});
    }
    report.results["rows"] = rows;
    report.results["warnings"] = warnings;

    report.human = fmt::format("rank of Qhol_sigma(n,{}) (x) Q for sigma = {{{}}}\n\n", k,
                               sigma_text) +
                   render_table(table);
    for (const std::string& w : warnings)
        report.human += "warning: " + w + "\n";
    report.csv = render_csv(csv);

    return session.finish(std::move(report), "rank",
                          Json{{"sigma", names}, {"k", k}, {"n", n_text}});
}

int run_morin(Session& session, int n, int k, int r, bool check) {
    Report report;
    Json inputs{{"n", n}, {"k", k}, {"r", r}, {"check", check}};
    if (!check) {
        const Int closed = morin_rank_closed_form(n, k, r);
        report.results["closed_form"] = json_int(closed);
        report.human = fmt::format("morin closed form (n={}, k={}, r={}): {}\n", n, k, r,
                                   closed.str());
        report.csv = render_csv({{"n", "k", "r", "closed_form"},
                                 {std::to_string(n), std::to_string(k), std::to_string(r),
                                  closed.str()}});
        return session.finish(std::move(report), "morin", std::move(inputs));
    }
    const MorinCheck result = morin_crosscheck(n, k, r);
    const std::string status = result.agree ? "agree" : "mismatch";
    report.results["closed_form"] = json_int(result.closed_form);
    report.results["sum_over_eta"] = json_int(result.sum_over_eta);
    report.results["status"] = status;
    report.trace.push_back(Json{{"detail", "sum over eta evaluates Qhol_sigma(n,k) (x) Q "
                                           "with sigma = {Sigma0, A1, ..., Ar}"}});
    report.human = fmt::format(
        "morin check (n={}, k={}, r={}): {}\n  closed form   = {}\n  sum over eta  = {}\n", n,
        k, r, status, result.closed_form.str(), result.sum_over_eta.str());
    report.csv = render_csv({{"n", "k", "r", "closed_form", "sum_over_eta", "status"},
                             {std::to_string(n), std::to_string(k), std::to_string(r),
                              result.closed_form.str(), result.sum_over_eta.str(), status}});
    return session.finish(std::move(report), "morin", std::move(inputs));
}

int run_fold_table(Session& session, int n_max) {
    const StemTable stems = session.stems();
    Report report;
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table{{"n", "Qhol(n,1)", "free", "torsion", "status"}};
    std::vector<std::vector<std::string>> csv{{"n", "qhol", "free", "torsion", "status"}};
    for (int n = 0; n <= n_max; ++n) {
        const FoldAnalysis analysis = fold_cobordism_analysis(n, stems);
        const GroupTerm& term = analysis.result;
        std::string free_text = "?", torsion_text = "?", status;
        if (term.is_known()) {
            status = "exact";
            free_text = std::to_string(term.value.free_rank());
            torsion_text = group_or_dash(term.value);
        } else {
            status = "candidates";
            bool same_rank = true;
            for (const FgAbelianGroup& c : term.candidates)
                same_rank &= c.free_rank() == term.candidates.front().free_rank();
            if (same_rank && !term.candidates.empty())
                free_text = std::to_string(term.candidates.front().free_rank());
        }
        rows.push_back(Json{{"n", n}, {"qhol", json_term(term)}, {"status", status}});
        Json trace_entry{{"n", n},
                         {"facts", analysis.facts},
                         {"deductions", json_trace(analysis.outcome.trace)}};
        report.trace.push_back(std::move(trace_entry));
        table.push_back({std::to_string(n), term.to_string(), free_text, torsion_text, status});
        csv.push_back({std::to_string(n), term.to_string(), free_text, torsion_text, status});
    }
    report.results["rows"] = rows;
    report.human = fmt::format("cobordism groups of quasi-holomorphic fold maps M^n -> R^(n+2)"
                               " for n = 0..{}\n\n", n_max) +
                   render_table(table);
    report.csv = render_csv(csv);
    return session.finish(std::move(report), "fold-table", Json{{"n_max", n_max}});
}

int run_torsion_primes(Session& session, int n, long p_max) {
    const TorsionPrimeReport result = fold_torsion_primes(n, p_max);
    Report report;
    Json checks = Json::array();
    std::vector<std::vector<std::string>> table{{"p", "certified"}};
    std::vector<std::vector<std::string>> csv{{"n", "p", "certified"}};
    std::string certified_list;
    for (const TorsionPrimeCheck& c : result.checks) {
        checks.push_back(Json{{"p", c.p}, {"certified", c.certified}});
        report.trace.push_back(Json{{"p", c.p},
                                    {"total_degree", n + 2},
                                    {"serre_bound", 2 * c.p - 3},
                                    {"certified", c.certified}});
        table.push_back({std::to_string(c.p), c.certified ? "yes" : "no"});
        csv.push_back({std::to_string(n), std::to_string(c.p), c.certified ? "yes" : "no"});
        if (c.certified)
            certified_list += (certified_list.empty() ? "" : " ") + std::to_string(c.p);
    }
    report.results["certified"] = result.certified();
    report.results["checks"] = checks;
    report.human = fmt::format(
        "odd primes p <= {} with provably trivial p-torsion in Qhol_mu1({},1)\n"
        "certified: {}\n\n", p_max, n, certified_list.empty() ? "(none)" : certified_list) +
        render_table(table);
    report.csv = render_csv(csv);
    return session.finish(std::move(report), "torsion-primes",
                          Json{{"n", n}, {"p_max", p_max}});
}

int run_verify_txi(Session& session, int max_degree) {
    const TxiReport result = verify_prop_txi(max_degree);
    Report report;
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table{
        {"degree", "coeff", "thom side", "smash side", "equal"}};
    std::vector<std::vector<std::string>> csv{
        {"degree", "coeff", "thom_side", "smash_side", "equal"}};
    for (const TxiRow& row : result.rows) {
        rows.push_back(Json{{"degree", row.degree},
                            {"coeff", row.coeff.to_string()},
                            {"thom_side", json_group(row.thom_side)},
                            {"smash_side", json_group(row.smash_side)},
                            {"equal", row.equal}});
        table.push_back({std::to_string(row.degree), row.coeff.to_string(),
                         row.thom_side.to_string(), row.smash_side.to_string(),
                         row.equal ? "yes" : "no"});
        csv.push_back({std::to_string(row.degree), row.coeff.to_string(),
                       row.thom_side.to_string(), row.smash_side.to_string(),
                       row.equal ? "yes" : "no"});
    }
    report.results["max_degree"] = max_degree;
    report.results["all_equal"] = result.all_equal;
    report.results["rows"] = rows;
    report.trace.push_back(Json{
        {"detail", "thom side: rank-3 shift of the closed-form CP^inf x CP^inf homology; "
                   "smash side: Smith reduction of cellular CP and stunted models, "
                   "CP^inf/RP^inf entering as the degree-2 shift of CP^inf"}});
    report.human =
        fmt::format("T(xi_A1) ~ CP^inf/RP^inf ^ CP^inf/CP^1 homology comparison through "
                    "degree {}: {}\n\n", max_degree,
                    result.all_equal ? "all degrees agree" : "DISAGREEMENT FOUND") +
        render_table(table);
    report.csv = render_csv(csv);
    return session.finish(std::move(report), "verify-txi", Json{{"max_degree", max_degree}});
}

int run_homology(Session& session, const std::string& space_text,
                 const std::string& coeff_text) {
    const SpaceSpec space = SpaceSpec::parse(space_text);
    const CoeffSystem coeff = parse_coeff(coeff_text);
    const auto natural_top = [](const SpaceSpec& s) {
        int top = 0;
        const SpaceSpec* cursor = &s;
        while (cursor->kind == SpaceSpec::Kind::suspension) {
            ++top;
            cursor = cursor->inner.get();
        }
        switch (cursor->kind) {
            case SpaceSpec::Kind::cp:
            case SpaceSpec::Kind::stunted_cp:
                return top + 2 * cursor->n;
            case SpaceSpec::Kind::rp:
                return top + cursor->n;
            default:
                return top;
        }
    };
    const ChainComplex complex = standard_space_complex(space, natural_top(space));
    const HomologyResult homology = homology_of_complex(complex, coeff);

    Report report;
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table{{"degree", "group"}};
    std::vector<std::vector<std::string>> csv{{"degree", "group"}};
    for (int d = 0; d <= homology.valid_to(); ++d) {
        rows.push_back(Json{{"degree", d}, {"group", json_group(homology.at(d))}});
        table.push_back({std::to_string(d), homology.at(d).to_string()});
        csv.push_back({std::to_string(d), homology.at(d).to_string()});
    }
    report.results["space"] = space.to_string();
    report.results["coeff"] = coeff.to_string();
    report.results["rows"] = rows;
    report.human = fmt::format("cellular homology of {} with {} coefficients\n\n",
                               space.to_string(), coeff.to_string()) +
                   render_table(table);
    report.csv = render_csv(csv);
    return session.finish(std::move(report), "homology",
                          Json{{"space", space_text}, {"coeff", coeff_text}});
}

int run_branch(Session& session, const std::string& preset) {
    const BranchScenario scenario = branch_preset(preset);
    Report report;
    report.results["preset"] = scenario.name;
    report.results["description"] = scenario.description;
    report.results["branch_class"] = scenario.branch_class.to_string();
    report.results["pairing"] = json_int(scenario.pairing);
    report.trace.push_back(Json{
        {"detail", "branch class = degree-2 part of f^*c(TP) . c(TM)^{-1}, equal to the "
                   "fold Thom polynomial c_1 evaluated at the normal Chern class"}});
    report.human = fmt::format(
        "branch locus of {} ({})\n  class          = {}\n  <class,[M]>    = {}\n",
        scenario.name, scenario.description, scenario.branch_class.to_string(),
        scenario.pairing.str());
    report.csv = render_csv({{"preset", "branch_class", "pairing"},
                             {scenario.name, scenario.branch_class.to_string(),
                              scenario.pairing.str()}});
    return session.finish(std::move(report), "branch", Json{{"preset", preset}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for cobordism groups of quasi-holomorphic maps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qhol::tool_version));

    Session session;
    const char* env_registry = std::getenv("QHOL_REGISTRY");
    const char* env_stems = std::getenv("QHOL_STEMS");
    session.registry_path =
        env_registry ? env_registry : default_data_file(argv[0], "registry.txt");
    session.stems_path = env_stems ? env_stems : default_data_file(argv[0], "stems.txt");

    app.add_option("--format", session.format_text, "output format: human, json or csv")
        ->default_val("human");
    app.add_option("--registry", session.registry_path, "singularity registry file");
    app.add_option("--stems", session.stems_path, "stable stems data file");

    std::string sigma_text, n_text = "0", space_text, coeff_text = "Z", preset;
    int k = 0, morin_n = 0, morin_k = 0, morin_r = 0, n_max = 5, torsion_n = 0;
    int max_degree = 40;
    long p_max = 199;
    bool check = false;

    CLI::App* rank = app.add_subcommand("rank", "rational rank of Qhol_sigma(n,k)");
    rank->add_option("--sigma", sigma_text, "comma-separated singularity names")->required();
    rank->add_option("--k", k, "complex codimension")->required();
    rank->add_option("--n", n_text, "source dimension or inclusive range a..b")->required();

    CLI::App* morin = app.add_subcommand("morin", "printed Morin-example rank formula");
    morin->add_option("--n", morin_n)->required();
    morin->add_option("--k", morin_k)->required();
    morin->add_option("--r", morin_r)->required();
    morin->add_flag("--check", check, "compare against the sum-over-eta rank");

    CLI::App* fold = app.add_subcommand("fold-table",
                                        "fold cobordism groups Qhol_mu1(n,1), n = 0..5");
    fold->add_option("--n-max", n_max, "largest n (at most 5)")->default_val(5);

    CLI::App* torsion = app.add_subcommand("torsion-primes",
                                           "odd primes with certified trivial torsion");
    torsion->add_option("--n", torsion_n)->required();
    torsion->add_option("--p-max", p_max, "largest prime to certify")->default_val(199);

    CLI::App* txi = app.add_subcommand("verify-txi",
                                       "compare the two fold Thom space descriptions");
    txi->add_option("--max-degree", max_degree)->default_val(40);

    CLI::App* homology = app.add_subcommand("homology", "homology of a standard space");
    homology->add_option("--space", space_text, "CP(n), RP(n), CP(n)/CP(m) or S(...)")
        ->required();
    homology->add_option("--coeff", coeff_text, "Z or Z/<p>")->default_val("Z");

    CLI::App* branch = app.add_subcommand("branch", "branch locus class of a preset cover");
    branch->add_option("--preset", preset, "identity, double-cover or torus")->required();

    for (CLI::App* sub : {rank, morin, fold, torsion, txi, homology, branch})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank->parsed())
            return run_rank(session, sigma_text, k, n_text);
        if (morin->parsed())
            return run_morin(session, morin_n, morin_k, morin_r, check);
        if (fold->parsed()) {
            if (n_max < 0 || n_max > 5)
                throw std::invalid_argument("--n-max must be between 0 and 5");
            return run_fold_table(session, n_max);
        }
        if (torsion->parsed())
            return run_torsion_primes(session, torsion_n, p_max);
        if (txi->parsed())
            return run_verify_txi(session, max_degree);
        if (homology->parsed())
            return run_homology(session, space_text, coeff_text);
        if (branch->parsed())
            return run_branch(session, preset);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 0;
}
