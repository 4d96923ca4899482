#include "tedpoly/transform.hpp"

#include "tedpoly/errors.hpp"
#include "tedpoly/parallel.hpp"

namespace tedpoly {

Epsilon::Epsilon(Rational value) : value_(std::move(value))
{
    if (value_.sign() <= 0)
        throw DomainError("epsilon must be positive, got " + value_.str());
}

Epsilon Epsilon::parse(std::string_view text)
{
    return Epsilon(Rational::parse(text));
}

Rational QPoint::trace() const
{
    Rational t;
    for (int i = 0; i < n; ++i)
        t += at(i, i);
    return t;
}

Rational QPoint::squared_norm() const
{
    return dot(coords, coords);
}

ExactMatrix QPoint::as_matrix() const
{
    const auto size = static_cast<std::size_t>(n);
    return ExactMatrix(size, size, std::vector<Rational>(coords.begin(), coords.end()));
}

PointSet::PointSet(int n, Epsilon epsilon, std::vector<QPoint> points)
    : n_(n), epsilon_(std::move(epsilon)), points_(std::move(points))
{
    for (const auto& q : points_)
    {
        if (q.n != n_ || q.epsilon != epsilon_)
            throw DomainError("point set mixes points of different n or epsilon");
    }
}

ExactMatrix center(int n)
{
    if (n < kMinOrder)
        throw DomainError("center requires n >= 3");
    const auto size = static_cast<std::size_t>(n);
    return ExactMatrix(size, size, std::vector<Rational>(size * size, Rational(BigInt(1), BigInt(n))));
}

ExactMatrix stretch_tour(const Permutation& p, const Epsilon& eps)
{
    if (classify(p) != PermClass::Tour)
        throw ClassError("stretch_tour requires a tour, got " + p.str());
    const ExactMatrix base = to_matrix(p);
    const ExactMatrix mid = center(p.size());
    ExactMatrix out(base.rows(), base.cols());
    for (std::size_t r = 0; r < base.rows(); ++r)
        for (std::size_t c = 0; c < base.cols(); ++c)
            out(r, c) = base(r, c) + eps.value() * (base(r, c) - mid(r, c));
    return out;
}

QPoint make_qpoint(const Permutation& p, const Epsilon& eps)
{
    const int n = p.size();
    const PermClass cls = classify(p);

    // Tours are stretched away from the center first; everything is then
    // shifted by eps times the center.
    const ExactMatrix base = cls == PermClass::Tour ? stretch_tour(p, eps) : to_matrix(p);
    const Rational shift = eps.value() / Rational(n);

    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(n * n));
    for (std::size_t r = 0; r < base.rows(); ++r)
        for (std::size_t c = 0; c < base.cols(); ++c)
            coords.push_back(base(r, c) + shift);

    return QPoint{n, eps, ExactVector(std::move(coords)), p, cls};
}

PointSet build_point_set(int n, const Epsilon& eps, unsigned workers)
{
    const auto perms = enumerate_permutations(n);
    std::vector<QPoint> points(perms.size());
    parallel_for(perms.size(), workers, [&](std::size_t i) { points[i] = make_qpoint(perms[i], eps); });
    return PointSet(n, eps, std::move(points));
}

std::vector<std::string> check_point_invariants(const QPoint& q)
{
    std::vector<std::string> issues;
    const int n = q.n;
    const Rational& e = q.epsilon.value();
    const Rational n_r(n);
    const Rational target = 1 + e;
    const std::string tag = "point " + q.source.str() + ": ";

    for (int i = 0; i < n; ++i)
    {
        Rational row;
        Rational col;
        for (int j = 0; j < n; ++j)
        {
            row += q.at(i, j);
            col += q.at(j, i);
        }
        if (row != target)
            issues.push_back(tag + "row " + std::to_string(i) + " sums to " + row.str());
        if (col != target)
            issues.push_back(tag + "column " + std::to_string(i) + " sums to " + col.str());
    }

    const Rational norm = q.squared_norm();
    const Rational trace = q.trace();
    if (q.perm_class == PermClass::Tour)
    {
        for (const auto& v : q.coords)
        {
            if (v != 0 && v != target)
            {
                issues.push_back(tag + "tour entry " + v.str() + " not in {0, 1+eps}");
                break;
            }
        }
        if (norm != n_r * target * target)
            issues.push_back(tag + "tour squared norm " + norm.str());
        if (trace != 0)
            issues.push_back(tag + "tour trace " + trace.str());
    }
    else
    {
        const Rational low = e / n_r;
        const Rational high = 1 + low;
        for (const auto& v : q.coords)
        {
            if (v != low && v != high)
            {
                issues.push_back(tag + "non-tour entry " + v.str() + " not in {eps/n, 1+eps/n}");
                break;
            }
        }
        const Rational by_levels = n_r * high * high + Rational(n * n - n) * low * low;
        const Rational closed_form = n_r + e * (2 + e);
        if (norm != by_levels || norm != closed_form)
            issues.push_back(tag + "non-tour squared norm " + norm.str());

        const int k = q.source.fixed_points();
        if (trace != Rational(k) + e)
            issues.push_back(tag + "trace " + trace.str() + " != fixed points + eps");
        if (q.perm_class == PermClass::ReflexiveNonTour && trace < 1 + e)
            issues.push_back(tag + "reflexive trace below 1+eps");
    }
    return issues;
}

}   // namespace tedpoly
