#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tedpoly/extremality.hpp"
#include "tedpoly/transform.hpp"

namespace tedpoly {

/** Simple directed graph on n vertices: 0/1 adjacency, no loops. */
class Digraph
{
public:
    /** Row-major adjacency; throws DomainError on non-0/1 entries or loops. */
    Digraph(int n, std::vector<std::uint8_t> adjacency);

    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);
    static Digraph complete(int n);
    static Digraph from_permutation(const Permutation& p);

    /** Reads "n" followed by n lines of n space-separated 0/1 digits; throws ParseError. */
    static Digraph parse(std::istream& in);
    static Digraph parse(std::string_view text);

    /** The 2^(n^2 - n) loopless digraphs are indexed by the bits of their off-diagonal arcs. */
    static Digraph from_index(int n, std::uint64_t bits);

    int n() const { return n_; }
    bool has_arc(int from, int to) const { return adj_[static_cast<std::size_t>(from * n_ + to)] != 0; }
    int arc_count() const;

    /** Adjacency flattened row by row, as rationals. */
    ExactVector flatten() const;

    /** Text in the graph file format. */
    std::string str() const;

private:
    int n_;
    std::vector<std::uint8_t> adj_;
};

/** Backtracking search for a directed Hamilton cycle anchored at vertex 0. */
bool oracle_is_hamiltonian(const Digraph& g);

/** <g, q> for one point; only arcs of g contribute. */
Rational overlap(const Digraph& g, const QPoint& q);

struct MaxOverPoints
{
    Rational value;
    std::size_t index = 0;
    PermClass perm_class = PermClass::Tour;
};

/** max <g, q> over all points, ties to the lowest index. */
MaxOverPoints brute_max(const Digraph& g, const PointSet& ps);

struct TheoremCheck
{
    bool hamiltonian = false;
    Rational tour_max;
    Rational nontour_max;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/**
 * Compares the maxima over the tour points and over the non-tour points
 * against the bounds for Hamiltonian and non-Hamiltonian graphs.
 */
TheoremCheck check_theorem_bounds(const Digraph& g, const PointSet& ps);

struct DecisionReport
{
    std::string graph_id;
    int n = 0;
    Epsilon epsilon{Rational(1)};
    bool oracle_hamiltonian = false;
    Rational lp_value;
    bool lp_hamiltonian = false;
    Rational brute_value;
    std::size_t argmax_index = 0;
    PermClass argmax_class = PermClass::Tour;
    bool theorem_bounds_ok = false;
    std::size_t lp_pivots = 0;

    /** LP agrees with brute force and with the oracle, and the bounds hold. */
    bool consistent() const;
};

/** The decision LP: maximize <g, sum_j alpha_j q_j> with sum alpha = 1, alpha >= 0. */
LpProblem decision_problem(const Digraph& g, const PointSet& ps);

/**
 * Decides Hamiltonicity through the decision LP.  `verdict` must be a good
 * verdict for the same (n, eps) as `ps`, otherwise ConfigError.
 */
DecisionReport lp_decide(const Digraph& g, const PointSet& ps, const EpsilonVerdict& verdict,
                         std::string_view graph_id = {}, std::ostream* lp_dump = nullptr);

/** Same as lp_decide without the goodness requirement (experiments at bad eps). */
DecisionReport lp_decide_unchecked(const Digraph& g, const PointSet& ps, std::string_view graph_id = {},
                                   std::ostream* lp_dump = nullptr);

}   // namespace tedpoly
