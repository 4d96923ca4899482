#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tedpoly/double_description.hpp"
#include "tedpoly/errors.hpp"
#include "tedpoly/extremality.hpp"
#include "tedpoly/facets.hpp"

using namespace tedpoly;

namespace {

std::vector<ProjectedPoint> as_points(const std::vector<std::vector<int>>& rows)
{
    std::vector<ProjectedPoint> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        std::vector<Rational> c(rows[i].begin(), rows[i].end());
        out.push_back(ProjectedPoint{ExactVector(std::move(c)), i});
    }
    return out;
}

std::vector<std::vector<int>> cube()
{
    std::vector<std::vector<int>> out;
    for (int m = 0; m < 8; ++m)
        out.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
    return out;
}

}   // namespace

TEST(Project, FourPoints)
{
    const PointSet ps = build_point_set(4, Epsilon(Rational(1)));
    const auto pts = project(ps);
    ASSERT_EQ(pts.size(), 24u);
    EXPECT_EQ(pts.front().coords.size(), 9u);
    std::set<ExactVector> distinct;
    for (const auto& p : pts)
        distinct.insert(p.coords);
    EXPECT_EQ(distinct.size(), 24u);

    std::size_t t = 0;
    while (ps[t].source != Permutation({1, 2, 3, 0}))
        ++t;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            EXPECT_EQ(pts[t].coords[static_cast<std::size_t>(r * 3 + c)], ps[t].at(r, c));
}

TEST(AffineDim, Examples)
{
    EXPECT_EQ(affine_dim(project(build_point_set(4, Epsilon(Rational(1))))), 9u);
    EXPECT_EQ(affine_dim(project(build_point_set(5, Epsilon(Rational(1))))), 16u);
    const std::vector<ExactVector> one{ExactVector{1, 2, 3}};
    EXPECT_EQ(affine_dim(std::span<const ExactVector>(one)), 0u);
}

TEST(DoubleDescription, PositiveOrthant)
{
    std::vector<dd::IntVector> rows;
    for (int k = 0; k < 3; ++k)
    {
        dd::IntVector r(3, BigInt(0));
        r[static_cast<std::size_t>(k)] = 1;
        rows.push_back(r);
    }
    const auto rays = dd::extreme_rays(rows);
    EXPECT_EQ(rays.size(), 3u);
}

TEST(DoubleDescription, NotPointed)
{
    EXPECT_THROW(dd::extreme_rays({dd::IntVector{BigInt(1), BigInt(0)}}), DimensionError);
}

TEST(Facets, Cube)
{
    const auto pts = as_points(cube());
    const HRepresentation h = enumerate_facets(pts);
    EXPECT_EQ(h.facets.size(), 6u);
    EXPECT_TRUE(verify_hrep(h, pts).ok());
}

TEST(Facets, Simplex)
{
    std::vector<std::vector<int>> rows(10, std::vector<int>(9, 0));
    for (int k = 0; k < 9; ++k)
        rows[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(k)] = 1;
    const auto pts = as_points(rows);
    const HRepresentation h = enumerate_facets(pts);
    EXPECT_EQ(h.facets.size(), 10u);
    std::vector<std::size_t> all(10);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(verify_hrep(h, pts, &all).ok());
}

TEST(Facets, InteriorPointIsNotAVertex)
{
    auto rows = cube();
    for (auto& r : rows)
        for (auto& v : r)
            v *= 2;
    rows.push_back({1, 1, 1});
    const auto pts = as_points(rows);
    const HRepresentation h = enumerate_facets(pts);
    EXPECT_EQ(h.facets.size(), 6u);
    std::vector<std::size_t> corners(8);
    std::iota(corners.begin(), corners.end(), 0);
    EXPECT_TRUE(verify_hrep(h, pts, &corners).ok());
    std::vector<std::size_t> all(9);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_FALSE(verify_hrep(h, pts, &all).ok());
}

TEST(Facets, Guards)
{
    const auto flat = as_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    EXPECT_THROW(enumerate_facets(flat), DimensionError);

    std::vector<std::vector<int>> big(11, std::vector<int>(10, 0));
    for (int k = 0; k < 10; ++k)
        big[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(k)] = 1;
    EXPECT_THROW(enumerate_facets(as_points(big)), DomainError);
    FacetOptions opt;
    opt.allow_large = true;
    EXPECT_EQ(enumerate_facets(as_points(big), opt).facets.size(), 11u);
}

TEST(VerifyHrep, DetectsBrokenSystems)
{
    const auto pts = as_points(cube());
    const HRepresentation h = enumerate_facets(pts);

    HRepresentation lowered = h;
    lowered.facets.front().rhs -= 1;
    const HrepCheck c1 = verify_hrep(lowered, pts);
    EXPECT_FALSE(c1.ok());
    EXPECT_FALSE(c1.points_satisfy);

    HRepresentation dup = h;
    dup.facets.push_back(dup.facets.front());
    const HrepCheck c2 = verify_hrep(dup, pts);
    EXPECT_FALSE(c2.ok());
    EXPECT_FALSE(c2.no_duplicates);

    HRepresentation loose = h;
    loose.facets.front().rhs += 1;
    EXPECT_FALSE(verify_hrep(loose, pts).facets_tight);
}

TEST(Facets, FourAtOneMatchesBruteForce)
{
    const PointSet ps = build_point_set(4, Epsilon(Rational(1)));
    const auto pts = project(ps);
    const HRepresentation h = enumerate_facets(pts);
    EXPECT_GE(h.facets.size(), 508u);

    // Coordinates are multiples of 1/4; the oracle works on 4x.
    std::vector<std::vector<std::int64_t>> scaled;
    for (const auto& p : pts)
    {
        std::vector<std::int64_t> row;
        for (const auto& v : p.coords)
            row.push_back((v * Rational(4)).numerator().get_si());
        scaled.push_back(row);
    }
    const auto brute = oracle::brute_force_facets(scaled);
    ASSERT_EQ(brute.size(), h.facets.size());

    // a.(4x) <= b  is  (4a).x <= b; compare after reduction to primitive form.
    std::set<std::vector<BigInt>> expected;
    for (const auto& f : brute)
    {
        std::vector<BigInt> v;
        for (std::size_t k = 0; k + 1 < f.size(); ++k)
            v.emplace_back(4 * f[k]);
        v.emplace_back(f.back());
        BigInt g = 0;
        for (const auto& x : v)
            g = gcd(g, x);
        for (auto& x : v)
            x /= g;
        expected.insert(v);
    }
    std::set<std::vector<BigInt>> actual;
    for (const auto& f : h.facets)
    {
        std::vector<BigInt> v = f.coeffs;
        v.push_back(f.rhs);
        actual.insert(v);
    }
    EXPECT_EQ(actual, expected);
}

TEST(Facets, FourAtOneVerifiesAgainstExtremePoints)
{
    const PointSet ps = build_point_set(4, Epsilon(Rational(1)));
    const auto pts = project(ps);
    const HRepresentation h = enumerate_facets(pts);
    const ExtremalityReport r = classify_extrema(ps);
    std::vector<std::size_t> extreme;
    for (const auto& v : r.per_point)
        if (v.is_extreme)
            extreme.push_back(v.index);
    ASSERT_EQ(extreme.size(), 24u);
    const HrepCheck c = verify_hrep(h, pts, &extreme);
    EXPECT_TRUE(c.ok());
    EXPECT_TRUE(c.vertices_match.value_or(false));
}
