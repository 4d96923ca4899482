#include "tedpoly/hamilton.hpp"

#include <istream>
#include <optional>
#include <sstream>

#include "tedpoly/errors.hpp"

namespace tedpoly {

Digraph::Digraph(int n, std::vector<std::uint8_t> adjacency) : n_(n), adj_(std::move(adjacency))
{
    if (n_ < 1)
        throw DomainError("digraph needs at least one vertex");
    if (adj_.size() != static_cast<std::size_t>(n_ * n_))
        throw DimensionError("adjacency matrix size does not match n");
    for (int i = 0; i < n_; ++i)
    {
        for (int j = 0; j < n_; ++j)
        {
            const auto v = adj_[static_cast<std::size_t>(i * n_ + j)];
            if (v > 1)
                throw DomainError("adjacency entries must be 0 or 1");
            if (i == j && v != 0)
                throw DomainError("loop at vertex " + std::to_string(i) + "; graphs must be simple");
        }
    }
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs)
{
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n * n), 0);
    for (const auto& [from, to] : arcs)
    {
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw DomainError("arc endpoint out of range");
        adj[static_cast<std::size_t>(from * n + to)] = 1;
    }
    return Digraph(n, std::move(adj));
}

Digraph Digraph::complete(int n)
{
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n * n), 1);
    for (int i = 0; i < n; ++i)
        adj[static_cast<std::size_t>(i * n + i)] = 0;
    return Digraph(n, std::move(adj));
}

Digraph Digraph::from_permutation(const Permutation& p)
{
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < p.size(); ++i)
        arcs.emplace_back(i, p[i]);
    return from_arcs(p.size(), arcs);
}

Digraph Digraph::parse(std::istream& in)
{
    int n = 0;
    if (!(in >> n) || n < 1)
        throw ParseError("graph file must start with a positive vertex count");
    std::vector<std::uint8_t> adj;
    adj.reserve(static_cast<std::size_t>(n * n));
    for (int k = 0; k < n * n; ++k)
    {
        std::string token;
        if (!(in >> token))
            throw ParseError("graph file ends after " + std::to_string(k) + " of " + std::to_string(n * n) + " entries");
        if (token != "0" && token != "1")
            throw ParseError("adjacency entry '" + token + "' is not 0 or 1");
        if (token == "1" && k / n == k % n)
            throw ParseError("nonzero diagonal entry at vertex " + std::to_string(k / n));
        adj.push_back(token == "1" ? 1 : 0);
    }
    std::string extra;
    if (in >> extra)
        throw ParseError("unexpected trailing content '" + extra + "' in graph file");
    return Digraph(n, std::move(adj));
}

Digraph Digraph::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse(in);
}

Digraph Digraph::from_index(int n, std::uint64_t bits)
{
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n * n), 0);
    int bit = 0;
    for (int i = 0; i < n; ++i)
    {
        for (int j = 0; j < n; ++j)
        {
            if (i == j)
                continue;
            adj[static_cast<std::size_t>(i * n + j)] = static_cast<std::uint8_t>((bits >> bit) & 1u);
            ++bit;
        }
    }
    return Digraph(n, std::move(adj));
}

int Digraph::arc_count() const
{
    int count = 0;
    for (auto v : adj_)
        count += v;
    return count;
}

ExactVector Digraph::flatten() const
{
    std::vector<Rational> out;
    out.reserve(adj_.size());
    for (auto v : adj_)
        out.emplace_back(static_cast<int>(v));
    return ExactVector(std::move(out));
}

std::string Digraph::str() const
{
    std::string out = std::to_string(n_) + "\n";
    for (int i = 0; i < n_; ++i)
    {
        for (int j = 0; j < n_; ++j)
        {
            out += has_arc(i, j) ? '1' : '0';
            out += j + 1 < n_ ? ' ' : '\n';
        }
    }
    return out;
}

namespace {

bool extend_path(const Digraph& g, std::vector<bool>& visited, int current, int depth)
{
    const int n = g.n();
    if (depth == n)
        return g.has_arc(current, 0);
    for (int next = 1; next < n; ++next)
    {
        if (visited[static_cast<std::size_t>(next)] || !g.has_arc(current, next))
            continue;
        visited[static_cast<std::size_t>(next)] = true;
        if (extend_path(g, visited, next, depth + 1))
            return true;
        visited[static_cast<std::size_t>(next)] = false;
    }
    return false;
}

}   // namespace

bool oracle_is_hamiltonian(const Digraph& g)
{
    const int n = g.n();
    if (n < kMinOrder)
        throw DomainError("Hamiltonicity oracle requires n >= 3");
    for (int v = 0; v < n; ++v)
    {
        bool out = false;
        bool in = false;
        for (int u = 0; u < n; ++u)
        {
            out = out || g.has_arc(v, u);
            in = in || g.has_arc(u, v);
        }
        if (!out || !in)
            return false;
    }
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    visited[0] = true;
    return extend_path(g, visited, 0, 1);
}

Rational overlap(const Digraph& g, const QPoint& q)
{
    if (g.n() != q.n)
        throw DimensionError("graph and point have different n");
    Rational sum;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (g.has_arc(i, j))
                sum += q.at(i, j);
    return sum;
}

MaxOverPoints brute_max(const Digraph& g, const PointSet& ps)
{
    if (g.n() != ps.n())
        throw DimensionError("graph has " + std::to_string(g.n()) + " vertices but points are for n = "
                             + std::to_string(ps.n()));
    MaxOverPoints best;
    for (std::size_t i = 0; i < ps.size(); ++i)
    {
        Rational v = overlap(g, ps[i]);
        if (i == 0 || v > best.value)
            best = MaxOverPoints{std::move(v), i, ps[i].perm_class};
    }
    return best;
}

TheoremCheck check_theorem_bounds(const Digraph& g, const PointSet& ps)
{
    if (g.n() != ps.n())
        throw DimensionError("graph and point set have different n");

    TheoremCheck check;
    check.hamiltonian = oracle_is_hamiltonian(g);

    std::optional<Rational> tour_max;
    std::optional<Rational> nontour_max;
    for (const auto& q : ps)
    {
        Rational v = overlap(g, q);
        auto& slot = q.perm_class == PermClass::Tour ? tour_max : nontour_max;
        if (!slot || v > *slot)
            slot = std::move(v);
    }
    check.tour_max = tour_max.value_or(Rational(0));
    check.nontour_max = nontour_max.value_or(Rational(0));

    const Rational n(ps.n());
    const Rational& eps = ps.epsilon().value();
    const Rational level = n * (1 + eps);
    auto require = [&](bool holds, const std::string& what) {
        if (!holds)
            check.violations.push_back(what);
    };

    if (check.hamiltonian)
    {
        require(check.tour_max == level, "tour max " + check.tour_max.str() + " != n(1+eps) = " + level.str());
        const Rational bound = level - eps;
        require(check.nontour_max <= bound,
                "non-tour max " + check.nontour_max.str() + " > n(1+eps)-eps = " + bound.str());
    }
    else
    {
        const Rational tour_bound = (n - 1) * (1 + eps);
        require(check.tour_max <= tour_bound,
                "tour max " + check.tour_max.str() + " > (n-1)(1+eps) = " + tour_bound.str());
        const Rational nontour_bound = n * (1 + eps / n) + Rational(g.arc_count()) * eps / n;
        require(check.nontour_max <= nontour_bound,
                "non-tour max " + check.nontour_max.str() + " > n(1+eps/n)+m eps/n = " + nontour_bound.str());
    }
    return check;
}

bool DecisionReport::consistent() const
{
    return lp_value == brute_value && lp_hamiltonian == oracle_hamiltonian && theorem_bounds_ok;
}

LpProblem decision_problem(const Digraph& g, const PointSet& ps)
{
    if (g.n() != ps.n())
        throw DimensionError("graph and point set have different n");
    // The q block is substituted out: the objective on alpha_j is <g, q_j>.
    std::vector<Rational> cost;
    cost.reserve(ps.size());
    for (const auto& q : ps)
        cost.push_back(overlap(g, q));
    ExactMatrix ones(1, ps.size(), std::vector<Rational>(ps.size(), Rational(1)));
    return LpProblem{ExactVector(std::move(cost)), std::move(ones), ExactVector{Rational(1)}};
}

DecisionReport lp_decide_unchecked(const Digraph& g, const PointSet& ps, std::string_view graph_id,
                                   std::ostream* lp_dump)
{
    const LpProblem problem = decision_problem(g, ps);
    if (lp_dump != nullptr)
        dump(*lp_dump, problem, "decide " + std::string(graph_id));
    const LpResult lp = solve(problem);
    if (lp.status != LpStatus::Optimal)
        throw std::logic_error("decision LP is not optimal: " + std::string(to_string(lp.status)));

    const MaxOverPoints brute = brute_max(g, ps);
    const TheoremCheck bounds = check_theorem_bounds(g, ps);

    DecisionReport report;
    report.graph_id = std::string(graph_id);
    report.n = ps.n();
    report.epsilon = ps.epsilon();
    report.oracle_hamiltonian = bounds.hamiltonian;
    report.lp_value = lp.value;
    report.lp_hamiltonian = lp.value == Rational(ps.n()) * (1 + ps.epsilon().value());
    report.brute_value = brute.value;
    report.argmax_index = brute.index;
    report.argmax_class = brute.perm_class;
    report.theorem_bounds_ok = bounds.ok();
    report.lp_pivots = lp.pivots;
    return report;
}

DecisionReport lp_decide(const Digraph& g, const PointSet& ps, const EpsilonVerdict& verdict,
                         std::string_view graph_id, std::ostream* lp_dump)
{
    if (verdict.n != ps.n() || verdict.epsilon != ps.epsilon())
        throw ConfigError("goodness verdict is for a different (n, eps) than the point set");
    if (!verdict.good)
        throw ConfigError("eps = " + ps.epsilon().str() + " is not good for n = " + std::to_string(ps.n())
                          + "; pass an override to decide anyway");
    return lp_decide_unchecked(g, ps, graph_id, lp_dump);
}

}   // namespace tedpoly
