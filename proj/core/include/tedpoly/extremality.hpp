#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tedpoly/lp.hpp"
#include "tedpoly/permutations.hpp"
#include "tedpoly/transform.hpp"

namespace tedpoly {

/** Convex weights over other points reproducing the tested point. */
struct CombinationCertificate
{
    std::vector<std::pair<std::size_t, Rational>> weights;   ///< (point index, alpha > 0)
};

/**
 * Hyperplane strictly separating the tested point from all the others:
 * normal . q_i + offset < 0 <= normal . q_j + offset for every j != i.
 */
struct SeparatorCertificate
{
    ExactVector normal;
    Rational offset;
};

struct PointVerdict
{
    std::size_t index = 0;
    PermClass perm_class = PermClass::ReflexiveNonTour;
    bool is_extreme = false;
    std::optional<CombinationCertificate> combination;   ///< present iff !is_extreme
    std::optional<SeparatorCertificate> separator;       ///< present iff is_extreme
    std::size_t pivots = 0;
};

/**
 * Decides whether point i is a vertex of conv(ps) by asking whether it is a
 * convex combination of the remaining points.
 */
PointVerdict is_extreme(std::size_t i, const PointSet& ps);

/**
 * The membership system for point i: columns are the leading (n-1) x (n-1)
 * blocks of q_j (j != i) stacked on a row of ones.
 */
LpProblem membership_problem(std::size_t i, const PointSet& ps);

/** Re-checks a verdict's certificate with exact arithmetic. */
bool verify_verdict(const PointVerdict& verdict, const PointSet& ps);

struct ExtremalityReport
{
    int n = 0;
    Epsilon epsilon{Rational(1)};
    std::vector<PointVerdict> per_point;
    ClassCounts counts;   ///< extreme points only

    bool all_extreme() const;
};

ExtremalityReport classify_extrema(const PointSet& ps, unsigned workers = 1);
ExtremalityReport classify_extrema(int n, const Epsilon& eps, unsigned workers = 1);

struct EpsilonVerdict
{
    int n = 0;
    Epsilon epsilon{Rational(1)};
    bool good = false;
    /** First non-extreme point found (with its combination) when !good. */
    std::optional<PointVerdict> witness;
    /** Every point's separator when good. */
    std::vector<PointVerdict> separators;
};

/** Good iff every one of the n! points is extreme; stops at the first non-extreme point. */
EpsilonVerdict is_epsilon_good(int n, const Epsilon& eps, unsigned workers = 1);
EpsilonVerdict is_epsilon_good(const PointSet& ps, unsigned workers = 1);

bool verify_epsilon_verdict(const EpsilonVerdict& verdict);

struct EpsilonBracket
{
    int n = 0;
    Epsilon lo{Rational(1)};
    Epsilon hi{Rational(1)};
    /** Endpoint checks first, then bisection midpoints in probe order. */
    std::vector<EpsilonVerdict> probes;
    /** Observations contradicting monotonicity of goodness in epsilon. */
    std::vector<std::string> findings;

    Rational width() const { return hi.value() - lo.value(); }
};

/**
 * Rational bisection for the largest good epsilon.  Requires lo good and hi
 * not good (BracketError otherwise).  Each probe is decided on its own; for
 * each non-good probe the witness point is re-tested at every larger
 * non-good probe, and a witness that turns extreme again is recorded as a
 * finding.
 */
EpsilonBracket bracket_epsilon_max(int n, const Epsilon& lo, const Epsilon& hi, int max_iters,
                                   unsigned workers = 1);

}   // namespace tedpoly
