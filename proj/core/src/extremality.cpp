#include "tedpoly/extremality.hpp"

#include <atomic>
#include <mutex>

#include "tedpoly/errors.hpp"
#include "tedpoly/parallel.hpp"

namespace tedpoly {

namespace {

/** Row-major positions of the leading (n-1) x (n-1) block of an n x n point. */
std::vector<std::size_t> leading_block(int n)
{
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
    for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c < n - 1; ++c)
            out.push_back(static_cast<std::size_t>(r * n + c));
    return out;
}

}   // namespace

LpProblem membership_problem(std::size_t i, const PointSet& ps)
{
    if (i >= ps.size())
        throw DomainError("point index " + std::to_string(i) + " out of range");

    // Every point has line sums 1 + eps, so with the weights summing to 1 the
    // last row and column of the coordinate equations follow from the others.
    const auto coords = leading_block(ps.n());
    const std::size_t dim = coords.size();
    const std::size_t cols = ps.size() - 1;
    ExactMatrix a(dim + 1, cols);
    std::size_t col = 0;
    for (std::size_t j = 0; j < ps.size(); ++j)
    {
        if (j == i)
            continue;
        for (std::size_t k = 0; k < dim; ++k)
            a(k, col) = ps[j].coords[coords[k]];
        a(dim, col) = 1;
        ++col;
    }

    std::vector<Rational> rhs;
    rhs.reserve(dim + 1);
    for (auto k : coords)
        rhs.push_back(ps[i].coords[k]);
    rhs.emplace_back(1);
    return LpProblem{ExactVector(cols), std::move(a), ExactVector(std::move(rhs))};
}

PointVerdict is_extreme(std::size_t i, const PointSet& ps)
{
    const LpProblem system = membership_problem(i, ps);
    const FeasibilityResult fr = feasible(system.eq_matrix, system.eq_rhs);

    PointVerdict verdict;
    verdict.index = i;
    verdict.perm_class = ps[i].perm_class;
    verdict.is_extreme = !fr.feasible;
    verdict.pivots = fr.pivots;

    if (fr.feasible)
    {
        CombinationCertificate cert;
        for (std::size_t col = 0; col < fr.point.size(); ++col)
        {
            if (fr.point[col].is_zero())
                continue;
            const std::size_t j = col < i ? col : col + 1;
            cert.weights.emplace_back(j, fr.point[col]);
        }
        verdict.combination = std::move(cert);
    }
    else
    {
        const auto coords = leading_block(ps.n());
        std::vector<Rational> normal(ps[i].coords.size());
        for (std::size_t k = 0; k < coords.size(); ++k)
            normal[coords[k]] = fr.farkas[k];
        verdict.separator = SeparatorCertificate{ExactVector(std::move(normal)), fr.farkas[coords.size()]};
    }
    return verdict;
}

bool verify_verdict(const PointVerdict& verdict, const PointSet& ps)
{
    const std::size_t i = verdict.index;
    if (i >= ps.size() || verdict.perm_class != ps[i].perm_class)
        return false;
    const ExactVector& target = ps[i].coords;

    if (!verdict.is_extreme)
    {
        if (!verdict.combination || verdict.separator)
            return false;
        Rational total;
        std::vector<Rational> sum(target.size());
        for (const auto& [j, alpha] : verdict.combination->weights)
        {
            if (j == i || j >= ps.size() || alpha.sign() <= 0)
                return false;
            total += alpha;
            for (std::size_t k = 0; k < target.size(); ++k)
                sum[k] += alpha * ps[j].coords[k];
        }
        return total == 1 && ExactVector(std::move(sum)) == target;
    }

    if (!verdict.separator || verdict.combination)
        return false;
    const auto& sep = *verdict.separator;
    if (sep.normal.size() != target.size())
        return false;
    if (dot(sep.normal, target) + sep.offset >= 0)
        return false;
    for (std::size_t j = 0; j < ps.size(); ++j)
    {
        if (j != i && dot(sep.normal, ps[j].coords) + sep.offset < 0)
            return false;
    }
    return true;
}

bool ExtremalityReport::all_extreme() const
{
    return counts.total() == static_cast<std::int64_t>(per_point.size());
}

ExtremalityReport classify_extrema(const PointSet& ps, unsigned workers)
{
    ExtremalityReport report;
    report.n = ps.n();
    report.epsilon = ps.epsilon();
    report.per_point.resize(ps.size());
    parallel_for(ps.size(), workers, [&](std::size_t i) { report.per_point[i] = is_extreme(i, ps); });
    for (const auto& v : report.per_point)
    {
        if (v.is_extreme)
            report.counts.add(v.perm_class);
    }
    return report;
}

ExtremalityReport classify_extrema(int n, const Epsilon& eps, unsigned workers)
{
    return classify_extrema(build_point_set(n, eps, workers), workers);
}

EpsilonVerdict is_epsilon_good(const PointSet& ps, unsigned workers)
{
    EpsilonVerdict out;
    out.n = ps.n();
    out.epsilon = ps.epsilon();

    std::vector<std::optional<PointVerdict>> results(ps.size());
    // Smallest index known to be non-extreme; indices above it are skipped,
    // indices below it are still decided so the witness is deterministic.
    std::atomic<std::size_t> first_bad{ps.size()};

    parallel_for(ps.size(), workers, [&](std::size_t i) {
        if (i > first_bad.load())
            return;
        PointVerdict v = is_extreme(i, ps);
        if (!v.is_extreme)
        {
            std::size_t cur = first_bad.load();
            while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {}
        }
        results[i] = std::move(v);
    });

    const std::size_t bad = first_bad.load();
    out.good = bad == ps.size();
    if (out.good)
    {
        out.separators.reserve(ps.size());
        for (auto& r : results)
            out.separators.push_back(std::move(*r));
    }
    else
    {
        out.witness = std::move(results[bad]);
    }
    return out;
}

EpsilonVerdict is_epsilon_good(int n, const Epsilon& eps, unsigned workers)
{
    return is_epsilon_good(build_point_set(n, eps, workers), workers);
}

bool verify_epsilon_verdict(const EpsilonVerdict& verdict)
{
    const PointSet ps = build_point_set(verdict.n, verdict.epsilon);
    if (verdict.good)
    {
        if (verdict.separators.size() != ps.size())
            return false;
        for (std::size_t i = 0; i < ps.size(); ++i)
        {
            const auto& v = verdict.separators[i];
            if (v.index != i || !v.is_extreme || !verify_verdict(v, ps))
                return false;
        }
        return true;
    }
    return verdict.witness && !verdict.witness->is_extreme && verify_verdict(*verdict.witness, ps);
}

EpsilonBracket bracket_epsilon_max(int n, const Epsilon& lo, const Epsilon& hi, int max_iters, unsigned workers)
{
    check_order(n);
    if (!(lo < hi))
        throw BracketError("bracket requires lo < hi");
    if (max_iters < 0)
        throw BracketError("negative iteration count");

    EpsilonBracket out;
    out.n = n;
    out.lo = lo;
    out.hi = hi;

    out.probes.push_back(is_epsilon_good(n, lo, workers));
    if (!out.probes.back().good)
        throw BracketError("lower endpoint eps = " + lo.str() + " is not good for n = " + std::to_string(n));
    out.probes.push_back(is_epsilon_good(n, hi, workers));
    if (out.probes.back().good)
        throw BracketError("upper endpoint eps = " + hi.str() + " is good for n = " + std::to_string(n));

    for (int it = 0; it < max_iters; ++it)
    {
        const Epsilon mid((out.lo.value() + out.hi.value()) / Rational(2));
        out.probes.push_back(is_epsilon_good(n, mid, workers));
        if (out.probes.back().good)
            out.lo = mid;
        else
            out.hi = mid;
    }

    // A point that is a convex combination at some eps but a vertex again at
    // a larger non-good eps would contradict monotone behaviour.
    for (const auto& low : out.probes)
    {
        if (low.good)
            continue;
        const std::size_t w = low.witness->index;
        for (const auto& high : out.probes)
        {
            if (high.good || !(low.epsilon < high.epsilon))
                continue;
            if (high.witness->index == w)
                continue;
            const PointSet ps = build_point_set(n, high.epsilon);
            if (is_extreme(w, ps).is_extreme)
            {
                out.findings.push_back("point " + std::to_string(w) + " is not extreme at eps = " + low.epsilon.str()
                                       + " but extreme at eps = " + high.epsilon.str());
            }
        }
    }
    return out;
}

}   // namespace tedpoly
