#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tedpoly/errors.hpp"
#include "tedpoly/extremality.hpp"
#include "tedpoly/facets.hpp"
#include "tedpoly/hamilton.hpp"
#include "tedpoly/parallel.hpp"
#include "tedpoly/permutations.hpp"
#include "tedpoly/reference_table.hpp"
#include "tedpoly/transform.hpp"

namespace tedpoly::cli {

using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

Epsilon parse_eps(const std::string& text, const char* what)
{
    try
    {
        return Epsilon::parse(text);
    }
    catch (const Error& e)
    {
        throw UsageError(std::string(what) + ": '" + text + "' is not a positive rational (" + e.what() + ")");
    }
}

void require_order(int n)
{
    try
    {
        check_order(n);
    }
    catch (const DomainError& e)
    {
        throw UsageError(e.what());
    }
}

Json rationals(const ExactVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(x.str());
    return out;
}

Json integers(const std::vector<BigInt>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(x.get_str());
    return out;
}

Json counts_json(const ClassCounts& c)
{
    return Json{{"tours", c.tours}, {"irreflexive_nt", c.irreflexive_nontours}, {"reflexive_nt", c.reflexive_nontours}};
}

Json verdict_json(const PointVerdict& v)
{
    Json out{{"index", v.index}, {"class", to_string(v.perm_class)}, {"extreme", v.is_extreme}};
    if (v.combination)
    {
        Json weights = Json::array();
        for (const auto& [j, alpha] : v.combination->weights)
            weights.push_back(Json{{"index", j}, {"alpha", alpha.str()}});
        out["combination"] = std::move(weights);
    }
    if (v.separator)
        out["separator"] = Json{{"normal", rationals(v.separator->normal)}, {"offset", v.separator->offset.str()}};
    return out;
}

/** Writes `text` to the configured output (file or `out`). */
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text)
{
    if (cfg.output_path.empty())
    {
        out << text;
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file '" + cfg.output_path + "'");
    file << text;
}

void write_certificates(const std::string& path, const Json& doc)
{
    if (path.empty())
        return;
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open certificate file '" + path + "'");
    file << doc.dump(1) << '\n';
}

std::optional<int> integer_value(const Epsilon& eps)
{
    if (!eps.value().is_integer() || !eps.value().numerator().fits_sint_p())
        return std::nullopt;
    return static_cast<int>(eps.value().numerator().get_si());
}

// classify ------------------------------------------------------------------

int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const int n = cfg.ns.empty() ? 4 : cfg.ns.front();
    require_order(n);
    const auto perms = enumerate_permutations(n);
    ClassCounts counts;

    std::ostringstream text;
    if (cfg.format == Format::Csv)
    {
        text << "index,image,cycle_type,class\n";
        for (std::size_t i = 0; i < perms.size(); ++i)
        {
            const PermClass c = classify(perms[i]);
            counts.add(c);
            text << i << ',' << perms[i].str() << ',' << cycle_type_string(perms[i]) << ',' << to_string(c) << '\n';
        }
    }
    else
    {
        Json rows = Json::array();
        for (std::size_t i = 0; i < perms.size(); ++i)
        {
            const PermClass c = classify(perms[i]);
            counts.add(c);
            rows.push_back(Json{{"index", i},
                                {"image", perms[i].image()},
                                {"cycle_type", cycle_type_string(perms[i])},
                                {"class", to_string(c)}});
        }
        text << Json{{"n", n}, {"counts", counts_json(counts)}, {"permutations", std::move(rows)}}.dump(1) << '\n';
    }
    emit(cfg, out, text.str());
    err << "counts=" << counts.str() << '\n';
    return kExitOk;
}

// points --------------------------------------------------------------------

int run_points(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format_given && cfg.format != Format::Json)
        throw UsageError("points only supports --format json");
    const int n = cfg.ns.empty() ? 4 : cfg.ns.front();
    require_order(n);
    const Epsilon eps = parse_eps(cfg.eps, "--eps");
    const PointSet ps = build_point_set(n, eps, cfg.parallelism);

    int status = kExitOk;
    Json points = Json::array();
    for (std::size_t i = 0; i < ps.size(); ++i)
    {
        for (const auto& issue : check_point_invariants(ps[i]))
        {
            err << "invariant violated: " << issue << '\n';
            status = kExitMismatch;
        }
        points.push_back(Json{{"index", i},
                              {"class", to_string(ps[i].perm_class)},
                              {"image", ps[i].source.image()},
                              {"coords", rationals(ps[i].coords)}});
    }
    emit(cfg, out, Json{{"n", n}, {"eps", eps.str()}, {"points", std::move(points)}}.dump(1) + "\n");
    return status;
}

// table1 --------------------------------------------------------------------

int run_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{4, 5, 6} : cfg.ns;
    for (int n : ns)
        require_order(n);
    std::vector<Epsilon> epsilons;
    if (cfg.eps_list.empty())
    {
        for (int e : kReferenceEpsilons)
            epsilons.emplace_back(Rational(e));
    }
    else
    {
        for (const auto& e : cfg.eps_list)
            epsilons.push_back(parse_eps(e, "--eps"));
    }

    int status = kExitOk;
    std::ostringstream csv;
    csv << "n,eps,tours,irreflexive_nt,reflexive_nt,all_extreme\n";
    Json rows = Json::array();
    Json certificates = Json::array();

    for (int n : ns)
    {
        std::map<Epsilon, std::int64_t> irreflexive_by_eps;
        for (const auto& eps : epsilons)
        {
            const PointSet ps = build_point_set(n, eps, cfg.parallelism);
            const ExtremalityReport report = classify_extrema(ps, cfg.parallelism);
            const ClassCounts& c = report.counts;
            irreflexive_by_eps[eps] = c.irreflexive_nontours;

            for (const auto& v : report.per_point)
            {
                if (!verify_verdict(v, ps))
                {
                    err << "certificate failed to verify: n=" << n << " eps=" << eps.str() << " point " << v.index << '\n';
                    status = kExitMismatch;
                }
                if (!v.is_extreme && v.perm_class != PermClass::IrreflexiveNonTour)
                {
                    err << "invariant violated: " << to_string(v.perm_class) << " point " << v.index
                        << " is not extreme at n=" << n << " eps=" << eps.str() << '\n';
                    status = kExitMismatch;
                }
            }

            csv << n << ',' << eps.str() << ',' << c.tours << ',' << c.irreflexive_nontours << ','
                << c.reflexive_nontours << ',' << (report.all_extreme() ? "true" : "false") << '\n';
            Json row{{"n", n},
                     {"eps", eps.str()},
                     {"tours", c.tours},
                     {"irreflexive_nt", c.irreflexive_nontours},
                     {"reflexive_nt", c.reflexive_nontours},
                     {"all_extreme", report.all_extreme()}};

            if (const auto e = integer_value(eps))
            {
                if (const auto published = reference_counts(n, *e))
                {
                    row["published"] = published->str();
                    if (*published != c)
                    {
                        status = kExitMismatch;
                        std::size_t interior = 0;
                        std::optional<std::size_t> example;
                        for (const auto& v : report.per_point)
                        {
                            if (!v.is_extreme)
                            {
                                ++interior;
                                if (!example)
                                    example = v.index;
                            }
                        }
                        err << "MISMATCH n=" << n << " eps=" << eps.str() << ": exact " << c.str() << ", published "
                            << published->str() << "; " << interior
                            << " points carry verified convex-combination certificates";
                        if (example)
                            err << " (first: point " << *example << ", image " << ps[*example].source.str() << ")";
                        err << '\n';
                    }
                }
            }
            rows.push_back(std::move(row));

            if (!cfg.certificates_path.empty())
            {
                Json points = Json::array();
                for (const auto& v : report.per_point)
                    points.push_back(verdict_json(v));
                certificates.push_back(Json{{"n", n}, {"eps", eps.str()}, {"points", std::move(points)}});
            }
            err << "computed n=" << n << " eps=" << eps.str() << ": " << c.str() << '\n';
        }

        // Extreme irreflexive non-tour counts should not grow with eps.
        std::optional<std::int64_t> previous;
        for (const auto& [eps, count] : irreflexive_by_eps)
        {
            if (previous && count > *previous)
            {
                err << "non-monotone: n=" << n << " irreflexive non-tour extreme count rises to " << count
                    << " at eps=" << eps.str() << '\n';
                status = kExitMismatch;
            }
            previous = count;
        }
    }

    if (cfg.format == Format::Json)
        emit(cfg, out, Json{{"rows", std::move(rows)}}.dump(1) + "\n");
    else
        emit(cfg, out, csv.str());
    write_certificates(cfg.certificates_path, Json{{"cells", std::move(certificates)}});
    return status;
}

// epsmax --------------------------------------------------------------------

Json probe_json(const EpsilonVerdict& v, bool verified)
{
    Json out{{"eps", v.epsilon.str()}, {"good", v.good}, {"verified", verified}};
    if (v.good)
        out["separators"] = v.separators.size();
    else
        out["witness"] = verdict_json(*v.witness);
    return out;
}

int run_epsmax(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.ns.empty())
        throw UsageError("epsmax requires --n");
    const int n = cfg.ns.front();
    require_order(n);
    const Epsilon lo = parse_eps(cfg.lo, "--lo");
    const Epsilon hi = parse_eps(cfg.hi, "--hi");
    if (cfg.iters < 0)
        throw UsageError("--iters must be nonnegative");

    EpsilonBracket bracket;
    try
    {
        bracket = bracket_epsilon_max(n, lo, hi, cfg.iters, cfg.parallelism);
    }
    catch (const BracketError& e)
    {
        err << "bracket error: " << e.what() << '\n';
        return kExitMismatch;
    }

    int status = kExitOk;
    Json probes = Json::array();
    Json certificates = Json::array();
    for (const auto& p : bracket.probes)
    {
        const bool verified = verify_epsilon_verdict(p);
        if (!verified)
        {
            err << "probe certificate failed to verify at eps=" << p.epsilon.str() << '\n';
            status = kExitMismatch;
        }
        probes.push_back(probe_json(p, verified));
        if (!cfg.certificates_path.empty())
        {
            Json points = Json::array();
            if (p.good)
                for (const auto& v : p.separators)
                    points.push_back(verdict_json(v));
            else
                points.push_back(verdict_json(*p.witness));
            certificates.push_back(Json{{"eps", p.epsilon.str()}, {"good", p.good}, {"points", std::move(points)}});
        }
    }
    for (const auto& f : bracket.findings)
        err << "finding: " << f << '\n';

    Json doc{{"n", n},
             {"lo", bracket.lo.str()},
             {"hi", bracket.hi.str()},
             {"width", bracket.width().str()},
             {"iters", cfg.iters},
             {"probes", std::move(probes)},
             {"findings", bracket.findings}};
    emit(cfg, out, doc.dump(1) + "\n");
    write_certificates(cfg.certificates_path, Json{{"n", n}, {"probes", std::move(certificates)}});
    return status;
}

// decide / sweep4 -----------------------------------------------------------

Json decision_json(const DecisionReport& r)
{
    const Rational threshold = Rational(r.n) * (1 + r.epsilon.value());
    return Json{{"graph_id", r.graph_id},
                {"n", r.n},
                {"eps", r.epsilon.str()},
                {"threshold", threshold.str()},
                {"lp_value", r.lp_value.str()},
                {"lp_hamiltonian", r.lp_hamiltonian},
                {"brute_value", r.brute_value.str()},
                {"argmax_index", r.argmax_index},
                {"argmax_class", to_string(r.argmax_class)},
                {"oracle_hamiltonian", r.oracle_hamiltonian},
                {"theorem_bounds_ok", r.theorem_bounds_ok},
                {"hamiltonian", r.lp_hamiltonian},
                {"consistent", r.consistent()}};
}

int run_decide(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.graph_path.empty())
        throw UsageError("decide requires --graph");
    const Epsilon eps = parse_eps(cfg.eps, "--eps");
    std::ifstream file(cfg.graph_path);
    if (!file)
        throw UsageError("cannot open graph file '" + cfg.graph_path + "'");
    std::optional<Digraph> graph;
    try
    {
        graph = Digraph::parse(file);
    }
    catch (const Error& e)
    {
        throw UsageError("graph file '" + cfg.graph_path + "': " + e.what());
    }
    require_order(graph->n());

    const PointSet ps = build_point_set(graph->n(), eps, cfg.parallelism);
    std::ostream* dump_to = cfg.debug_lp ? &err : nullptr;
    DecisionReport report;
    if (cfg.allow_bad_eps)
    {
        report = lp_decide_unchecked(*graph, ps, cfg.graph_path, dump_to);
    }
    else
    {
        const EpsilonVerdict verdict = is_epsilon_good(ps, cfg.parallelism);
        try
        {
            report = lp_decide(*graph, ps, verdict, cfg.graph_path, dump_to);
        }
        catch (const ConfigError& e)
        {
            throw UsageError(e.what());
        }
    }
    emit(cfg, out, decision_json(report).dump(1) + "\n");
    if (!report.consistent())
    {
        err << "decision is inconsistent (LP vs brute force vs oracle vs bounds)\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int run_sweep4(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    constexpr int n = 4;
    const Epsilon eps = parse_eps(cfg.eps, "--eps");
    const PointSet ps = build_point_set(n, eps, cfg.parallelism);
    std::optional<EpsilonVerdict> verdict;
    if (!cfg.allow_bad_eps)
    {
        verdict = is_epsilon_good(ps, cfg.parallelism);
        if (!verdict->good)
            throw UsageError("eps = " + eps.str() + " is not good for n = 4; pass --allow-bad-eps to sweep anyway");
    }

    constexpr std::uint64_t kGraphs = std::uint64_t{1} << (n * n - n);
    std::vector<DecisionReport> reports(kGraphs);
    parallel_for(kGraphs, cfg.parallelism, [&](std::size_t bits) {
        const Digraph g = Digraph::from_index(n, bits);
        const std::string id = "g" + std::to_string(bits);
        reports[bits] = verdict ? lp_decide(g, ps, *verdict, id) : lp_decide_unchecked(g, ps, id);
    });

    std::size_t hamiltonian = 0;
    std::size_t lp_oracle = 0;
    std::size_t lp_brute = 0;
    std::size_t bounds = 0;
    Json counterexamples = Json::array();
    for (const auto& r : reports)
    {
        hamiltonian += r.oracle_hamiltonian ? 1 : 0;
        lp_oracle += r.lp_hamiltonian == r.oracle_hamiltonian ? 1 : 0;
        lp_brute += r.lp_value == r.brute_value ? 1 : 0;
        bounds += r.theorem_bounds_ok ? 1 : 0;
        if (!r.consistent())
            counterexamples.push_back(decision_json(r));
    }
    const bool pass = counterexamples.empty();
    Json doc{{"n", n},
             {"eps", eps.str()},
             {"graphs", kGraphs},
             {"hamiltonian", hamiltonian},
             {"non_hamiltonian", kGraphs - hamiltonian},
             {"lp_matches_oracle", lp_oracle},
             {"lp_matches_brute", lp_brute},
             {"bounds_hold", bounds},
             {"result", pass ? "pass" : "fail"},
             {"counterexamples", std::move(counterexamples)}};
    emit(cfg, out, doc.dump(1) + "\n");
    err << "sweep4 " << (pass ? "pass" : "fail") << '\n';
    return pass ? kExitOk : kExitMismatch;
}

// facets --------------------------------------------------------------------

int run_facets(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const int n = cfg.ns.empty() ? 4 : cfg.ns.front();
    require_order(n);
    if (n > 4 && !cfg.allow_large)
        throw UsageError("facet enumeration is limited to n <= 4; pass --allow-large to override");
    const Epsilon eps = parse_eps(cfg.eps, "--eps");

    const PointSet ps = build_point_set(n, eps, cfg.parallelism);
    const auto projected = project(ps);
    const std::size_t dim = affine_dim(projected);

    FacetOptions options;
    options.allow_large = cfg.allow_large;
    const HRepresentation h = enumerate_facets(projected, options);

    const ExtremalityReport extrema = classify_extrema(ps, cfg.parallelism);
    std::vector<std::size_t> vertices;
    for (const auto& v : extrema.per_point)
        if (v.is_extreme)
            vertices.push_back(v.index);
    const HrepCheck check = verify_hrep(h, projected, &vertices);
    for (const auto& p : check.problems)
        err << "verify: " << p << '\n';

    Json facets = Json::array();
    for (const auto& f : h.facets)
        facets.push_back(Json{{"coeffs", integers(f.coeffs)}, {"rhs", integers({f.rhs}).front()}});
    Json doc{{"n", n},
             {"eps", eps.str()},
             {"dim", dim},
             {"count", h.facets.size()},
             {"vertices", vertices.size()},
             {"verified", check.ok()},
             {"facets", std::move(facets)}};
    emit(cfg, out, doc.dump(1) + "\n");
    err << "facets=" << h.facets.size() << " (published lower bound 508)\n";
    return check.ok() ? kExitOk : kExitMismatch;
}

}   // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try
    {
        switch (cfg.command)
        {
            case Command::Classify: return run_classify(cfg, out, err);
            case Command::Points: return run_points(cfg, out, err);
            case Command::Table1: return run_table1(cfg, out, err);
            case Command::EpsMax: return run_epsmax(cfg, out, err);
            case Command::Decide: return run_decide(cfg, out, err);
            case Command::Sweep4: return run_sweep4(cfg, out, err);
            case Command::Facets: return run_facets(cfg, out, err);
        }
    }
    catch (const UsageError& e)
    {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact-arithmetic experiments on stretched Birkhoff polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "csv";
    app.add_option("--parallelism,-j", cfg.parallelism, "Worker threads (0 = hardware concurrency)");
    app.add_option("--out,-o", cfg.output_path, "Write the report to this file instead of stdout");
    auto* format_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* classify = app.add_subcommand("classify", "Classify all n! permutations (CSV: index,image,cycle_type,class)");
    classify->add_option("--n", cfg.ns, "Order n")->required()->expected(1);

    auto* points = app.add_subcommand("points", "Emit the transformed point set as JSON");
    points->add_option("--n", cfg.ns, "Order n")->required()->expected(1);
    points->add_option("--eps", cfg.eps, "Stretch parameter p/q")->required();

    auto* table1 = app.add_subcommand("table1", "Extreme-point count triples over an (n, eps) grid");
    table1->add_option("--n", cfg.ns, "Order n (repeatable; default 4 5 6)");
    table1->add_option("--eps", cfg.eps_list, "Comma separated eps list (default 1,5,10,20)")->delimiter(',');
    table1->add_option("--certificates", cfg.certificates_path, "Write per-point certificates to this JSON file");

    auto* epsmax = app.add_subcommand("epsmax", "Bisect for the largest good eps");
    epsmax->add_option("--n", cfg.ns, "Order n")->required()->expected(1);
    epsmax->add_option("--lo", cfg.lo, "Good lower endpoint p/q")->required();
    epsmax->add_option("--hi", cfg.hi, "Non-good upper endpoint p/q")->required();
    epsmax->add_option("--iters", cfg.iters, "Bisection steps")->required();
    epsmax->add_option("--certificates", cfg.certificates_path, "Write probe certificates to this JSON file");

    auto* decide = app.add_subcommand("decide", "Decide Hamiltonicity of a digraph through the LP threshold");
    decide->add_option("--graph", cfg.graph_path, "Graph file")->required();
    decide->add_option("--eps", cfg.eps, "Stretch parameter p/q")->required();
    decide->add_flag("--allow-bad-eps", cfg.allow_bad_eps, "Skip the goodness requirement on eps");
    decide->add_flag("--debug-lp", cfg.debug_lp, "Dump the decision LP to stderr");

    auto* sweep4 = app.add_subcommand("sweep4", "Exhaustive n = 4 equivalence check over all 4096 digraphs");
    sweep4->add_option("--eps", cfg.eps, "Stretch parameter p/q")->required();
    sweep4->add_flag("--allow-bad-eps", cfg.allow_bad_eps, "Skip the goodness requirement on eps");

    auto* facets = app.add_subcommand("facets", "Irredundant facet list of the projected polytope");
    facets->add_option("--n", cfg.ns, "Order n (default 4)")->expected(1);
    facets->add_option("--eps", cfg.eps, "Stretch parameter p/q")->required();
    facets->add_flag("--allow-large", cfg.allow_large, "Lift the n <= 4 guard");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    cfg.format = format == "json" ? Format::Json : Format::Csv;
    cfg.format_given = format_opt->count() > 0;

    const std::pair<CLI::App*, Command> commands[] = {
        {classify, Command::Classify}, {points, Command::Points}, {table1, Command::Table1},
        {epsmax, Command::EpsMax},     {decide, Command::Decide}, {sweep4, Command::Sweep4},
        {facets, Command::Facets},
    };
    for (const auto& [sub, command] : commands)
        if (sub->parsed())
            cfg.command = command;
    if (cfg.command == Command::Points || cfg.command == Command::EpsMax || cfg.command == Command::Decide
        || cfg.command == Command::Sweep4 || cfg.command == Command::Facets)
    {
        if (!cfg.format_given)
            cfg.format = Format::Json;
        else if (cfg.format != Format::Json)
        {
            err << "usage error: this command only emits JSON\n";
            return kExitUsage;
        }
    }
    return run(cfg, out, err);
}

}   // namespace tedpoly::cli
