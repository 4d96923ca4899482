#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tedpoly/permutations.hpp"
#include "tedpoly/rational.hpp"

namespace tedpoly {

/** Strictly positive rational stretch parameter. */
class Epsilon
{
public:
    /** Throws DomainError unless value > 0. */
    explicit Epsilon(Rational value);

    /** Parses "p/q" or "p"; throws ArithmeticError or DomainError. */
    static Epsilon parse(std::string_view text);

    const Rational& value() const { return value_; }
    std::string str() const { return value_.str(); }

    friend bool operator==(const Epsilon&, const Epsilon&) = default;
    friend auto operator<=>(const Epsilon&, const Epsilon&) = default;

private:
    Rational value_;
};

/**
 * Image of one Birkhoff vertex.  Tours become (1+eps) P, every other
 * permutation becomes P + (eps/n) J.  Coordinates are the n x n matrix
 * flattened row by row.
 */
struct QPoint
{
    int n = 0;
    Epsilon epsilon{Rational(1)};
    ExactVector coords;
    Permutation source = Permutation::identity(kMinOrder);
    PermClass perm_class = PermClass::ReflexiveNonTour;

    const Rational& at(int row, int col) const { return coords[static_cast<std::size_t>(row * n + col)]; }
    Rational trace() const;
    Rational squared_norm() const;
    ExactMatrix as_matrix() const;
};

/** All n! points in enumeration order; immutable once built. */
class PointSet
{
public:
    PointSet(int n, Epsilon epsilon, std::vector<QPoint> points);

    int n() const { return n_; }
    const Epsilon& epsilon() const { return epsilon_; }
    std::size_t size() const { return points_.size(); }
    const QPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<QPoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    int n_;
    Epsilon epsilon_;
    std::vector<QPoint> points_;
};

/** The barycenter of the Birkhoff polytope: every entry 1/n. */
ExactMatrix center(int n);

/** P + eps (P - center); throws ClassError when p is not a tour. */
ExactMatrix stretch_tour(const Permutation& p, const Epsilon& eps);

QPoint make_qpoint(const Permutation& p, const Epsilon& eps);

PointSet build_point_set(int n, const Epsilon& eps, unsigned workers = 1);

/**
 * Checks the per-point identities (row/column sums, entry levels, squared
 * norm, trace by class).  Returns one message per violated identity.
 */
std::vector<std::string> check_point_invariants(const QPoint& q);

}   // namespace tedpoly
