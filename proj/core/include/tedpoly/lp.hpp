#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>

#include "tedpoly/rational.hpp"

namespace tedpoly {

/**
 * maximize objective . x  subject to  eq_matrix x = eq_rhs,  x >= 0.
 *
 * Free variables are not supported directly; callers substitute them out or
 * split them into nonnegative parts.
 */
struct LpProblem
{
    ExactVector objective;
    ExactMatrix eq_matrix;
    ExactVector eq_rhs;

    std::size_t var_count() const { return objective.size(); }
    std::size_t row_count() const { return eq_rhs.size(); }

    /** Throws DimensionError when the pieces disagree on shape. */
    void validate() const;
};

enum class LpStatus
{
    Optimal,
    Infeasible,
    Unbounded,
};

std::string_view to_string(LpStatus s);

struct LpResult
{
    LpStatus status = LpStatus::Infeasible;
    Rational value;           ///< objective at `solution` (Optimal only)
    ExactVector solution;     ///< basic feasible solution (Optimal and Unbounded)
    ExactVector farkas;       ///< y with y.A >= 0 and y.b < 0 (Infeasible only)
    std::size_t pivots = 0;
};

/**
 * Two-phase primal simplex on a fraction-free integer tableau.  Dantzig
 * pricing, falling back to Bland's smallest-index rule after a long run of
 * degenerate pivots.  Every Optimal result is re-substituted into the
 * constraints before returning.
 */
LpResult solve(const LpProblem& problem);

struct FeasibilityResult
{
    bool feasible = false;
    ExactVector point;    ///< satisfies A x = b, x >= 0 when feasible
    ExactVector farkas;   ///< infeasibility certificate otherwise
    std::size_t pivots = 0;
};

/** Phase I only; stops as soon as the artificial sum reaches zero. */
FeasibilityResult feasible(const ExactMatrix& a, const ExactVector& b);

/** True when y.A_j >= 0 for every column and y.b < 0. */
bool verify_farkas(const ExactMatrix& a, const ExactVector& b, const ExactVector& y);

/** True when A x = b and x >= 0 hold exactly. */
bool verify_feasible_point(const ExactMatrix& a, const ExactVector& b, const ExactVector& x);

/** Plain-text equality-form listing of the problem with rational literals. */
void dump(std::ostream& os, const LpProblem& problem, std::string_view title = {});

}   // namespace tedpoly
