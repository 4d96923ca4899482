#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tedpoly/rational.hpp"
#include "tedpoly/transform.hpp"

namespace tedpoly {

/** A point of the image space: Q[i][j] for i, j < n-1, row by row. */
struct ProjectedPoint
{
    ExactVector coords;
    std::size_t source = 0;   ///< index into the originating PointSet
};

/** Drops the last row and column of every point. */
std::vector<ProjectedPoint> project(const PointSet& ps);

/** Dimension of the affine hull (0 for a single point). */
std::size_t affine_dim(std::span<const ProjectedPoint> points);
std::size_t affine_dim(std::span<const ExactVector> points);

/** Inequality coeffs . x <= rhs with coprime integer entries. */
struct Facet
{
    std::vector<BigInt> coeffs;
    BigInt rhs;

    Rational slack(const ExactVector& x) const;   ///< rhs - coeffs . x
    friend bool operator==(const Facet&, const Facet&) = default;
    friend bool operator<(const Facet& a, const Facet& b);
};

struct HRepresentation
{
    std::size_t dimension = 0;
    std::vector<Facet> facets;   ///< sorted, duplicate free
    bool is_full_dimensional = false;
};

struct FacetOptions
{
    /** Guard on the ambient dimension; 9 is the image space of n = 4. */
    std::size_t max_dimension = 9;
    bool allow_large = false;
};

/**
 * Facets of conv(points) by double description on the cone of valid
 * inequalities.  Throws DimensionError unless the points are full dimensional
 * in their coordinate space, DomainError when the size guard trips.
 */
HRepresentation enumerate_facets(std::span<const ProjectedPoint> points, const FacetOptions& options = {});

/** Vertices of { x : facets } by double description on the homogenized cone. */
std::vector<ExactVector> hrep_vertices(const HRepresentation& h);

struct HrepCheck
{
    bool points_satisfy = false;   ///< every point satisfies every facet
    bool facets_tight = false;     ///< every facet is tight on dim affinely independent points
    bool no_duplicates = false;
    /** Vertex set of the inequality system equals `expected_vertices`; unset when not requested. */
    std::optional<bool> vertices_match;
    std::vector<std::string> problems;

    bool ok() const { return points_satisfy && facets_tight && no_duplicates && vertices_match.value_or(true); }
};

/**
 * Checks `h` against the points.  When `expected_vertices` is given (indices
 * into `points`), also enumerates the vertices of the inequality system and
 * compares the two sets exactly.
 */
HrepCheck verify_hrep(const HRepresentation& h, std::span<const ProjectedPoint> points,
                      const std::vector<std::size_t>* expected_vertices = nullptr);

}   // namespace tedpoly
