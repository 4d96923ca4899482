#include "tedpoly/facets.hpp"

#include <algorithm>
#include <set>

#include "tedpoly/double_description.hpp"
#include "tedpoly/errors.hpp"

namespace tedpoly {

namespace {

std::vector<ExactVector> coordinates(std::span<const ProjectedPoint> points)
{
    std::vector<ExactVector> out;
    out.reserve(points.size());
    for (const auto& p : points)
        out.push_back(p.coords);
    return out;
}

/** Positive multiple of (-x, 1) with integer entries: the row "rhs - a.x >= 0". */
dd::IntVector homogenized_point_row(const ExactVector& x)
{
    const BigInt scale = common_denominator(x.view());
    dd::IntVector row(x.size() + 1);
    for (std::size_t k = 0; k < x.size(); ++k)
    {
        const Rational v = x[k] * Rational(scale);
        row[k] = -v.numerator();
    }
    row[x.size()] = scale;
    return row;
}

}   // namespace

std::vector<ProjectedPoint> project(const PointSet& ps)
{
    const int n = ps.n();
    std::vector<ProjectedPoint> out;
    out.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
    {
        std::vector<Rational> coords;
        coords.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
        for (int r = 0; r < n - 1; ++r)
            for (int c = 0; c < n - 1; ++c)
                coords.push_back(ps[i].at(r, c));
        out.push_back(ProjectedPoint{ExactVector(std::move(coords)), i});
    }
    return out;
}

std::size_t affine_dim(std::span<const ExactVector> points)
{
    if (points.empty())
        throw DomainError("affine dimension of an empty point set");
    const ExactVector& base = points.front();
    ExactMatrix diff(points.size() - 1, base.size());
    for (std::size_t i = 1; i < points.size(); ++i)
    {
        if (points[i].size() != base.size())
            throw DimensionError("points of different dimension");
        for (std::size_t k = 0; k < base.size(); ++k)
            diff(i - 1, k) = points[i][k] - base[k];
    }
    return rank(diff);
}

std::size_t affine_dim(std::span<const ProjectedPoint> points)
{
    const auto coords = coordinates(points);
    return affine_dim(std::span<const ExactVector>(coords));
}

Rational Facet::slack(const ExactVector& x) const
{
    if (x.size() != coeffs.size())
        throw DimensionError("facet and point have different dimension");
    mpq_class s = rhs;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s -= coeffs[k] * x[k].raw();
    return Rational(s);
}

bool operator<(const Facet& a, const Facet& b)
{
    const auto less = [](const BigInt& x, const BigInt& y) { return cmp(x, y) < 0; };
    if (std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end(), less))
        return true;
    if (std::lexicographical_compare(b.coeffs.begin(), b.coeffs.end(), a.coeffs.begin(), a.coeffs.end(), less))
        return false;
    return cmp(a.rhs, b.rhs) < 0;
}

HRepresentation enumerate_facets(std::span<const ProjectedPoint> points, const FacetOptions& options)
{
    if (points.empty())
        throw DomainError("facet enumeration of an empty point set");
    const std::size_t dim = points.front().coords.size();
    if (dim > options.max_dimension && !options.allow_large)
        throw DomainError("dimension " + std::to_string(dim) + " exceeds the facet enumeration guard ("
                          + std::to_string(options.max_dimension) + "); pass an override to proceed");
    const std::size_t adim = affine_dim(points);
    if (adim != dim)
        throw DimensionError("points span an affine space of dimension " + std::to_string(adim) + " in R^"
                             + std::to_string(dim) + "; project onto the affine hull first");

    // Valid inequalities (a, b) with a.x <= b form the cone { (a, b) : b - a.p >= 0 }.
    std::vector<dd::IntVector> rows;
    rows.reserve(points.size());
    for (const auto& p : points)
        rows.push_back(homogenized_point_row(p.coords));

    HRepresentation h;
    h.dimension = dim;
    h.is_full_dimensional = true;
    for (auto& ray : dd::extreme_rays(rows))
    {
        Facet f;
        f.rhs = ray.back();
        ray.pop_back();
        f.coeffs = std::move(ray);
        h.facets.push_back(std::move(f));
    }
    std::sort(h.facets.begin(), h.facets.end());
    return h;
}

std::vector<ExactVector> hrep_vertices(const HRepresentation& h)
{
    // { (x, t) : b t - a.x >= 0, t >= 0 }; rays with t > 0 are vertices x / t.
    const std::size_t d = h.dimension;
    std::vector<dd::IntVector> rows;
    rows.reserve(h.facets.size() + 1);
    for (const auto& f : h.facets)
    {
        dd::IntVector row(d + 1);
        for (std::size_t k = 0; k < d; ++k)
            row[k] = -f.coeffs[k];
        row[d] = f.rhs;
        rows.push_back(std::move(row));
    }
    dd::IntVector t_row(d + 1, BigInt(0));
    t_row[d] = 1;
    rows.push_back(std::move(t_row));

    std::vector<ExactVector> out;
    for (const auto& ray : dd::extreme_rays(rows))
    {
        if (sgn(ray[d]) <= 0)
            throw DimensionError("inequality system is unbounded");
        std::vector<Rational> x;
        x.reserve(d);
        for (std::size_t k = 0; k < d; ++k)
            x.emplace_back(ray[k], ray[d]);
        out.emplace_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

HrepCheck verify_hrep(const HRepresentation& h, std::span<const ProjectedPoint> points,
                      const std::vector<std::size_t>* expected_vertices)
{
    HrepCheck check;
    check.points_satisfy = true;
    check.facets_tight = true;

    std::set<Facet> seen;
    for (const auto& f : h.facets)
        seen.insert(f);
    check.no_duplicates = seen.size() == h.facets.size();
    if (!check.no_duplicates)
        check.problems.push_back("duplicate facets: " + std::to_string(h.facets.size() - seen.size()));

    for (std::size_t fi = 0; fi < h.facets.size(); ++fi)
    {
        const Facet& f = h.facets[fi];
        std::vector<ExactVector> tight;
        for (const auto& p : points)
        {
            const Rational s = f.slack(p.coords);
            if (s.sign() < 0)
            {
                if (check.points_satisfy)
                    check.problems.push_back("facet " + std::to_string(fi) + " violated by point "
                                             + std::to_string(p.source));
                check.points_satisfy = false;
            }
            else if (s.is_zero())
            {
                tight.push_back(p.coords);
            }
        }
        const bool spans = !tight.empty() && affine_dim(std::span<const ExactVector>(tight)) + 1 == h.dimension;
        if (!spans)
        {
            if (check.facets_tight)
                check.problems.push_back("facet " + std::to_string(fi) + " is not tight on a ridge-dimensional set");
            check.facets_tight = false;
        }
    }

    if (expected_vertices != nullptr)
    {
        std::vector<ExactVector> expected;
        for (auto i : *expected_vertices)
        {
            if (i >= points.size())
                throw DomainError("expected vertex index out of range");
            expected.push_back(points[i].coords);
        }
        std::sort(expected.begin(), expected.end());
        try
        {
            check.vertices_match = hrep_vertices(h) == expected;
        }
        catch (const DimensionError& e)
        {
            check.vertices_match = false;
            check.problems.push_back(e.what());
        }
        if (!*check.vertices_match)
            check.problems.push_back("vertex set of the inequality system differs from the expected vertices");
    }
    return check;
}

}   // namespace tedpoly
