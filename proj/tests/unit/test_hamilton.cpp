#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "tedpoly/errors.hpp"
#include "tedpoly/hamilton.hpp"

using namespace tedpoly;

namespace {

Epsilon eps(const char* text)
{
    return Epsilon::parse(text);
}

/** Independent Hamiltonicity check: does some tour permutation lie inside g? */
bool contains_tour(const Digraph& g)
{
    for (const auto& p : enumerate_permutations(g.n()))
    {
        if (classify(p) != PermClass::Tour)
            continue;
        bool inside = true;
        for (int v = 0; v < g.n() && inside; ++v)
            inside = g.has_arc(v, p[v]);
        if (inside)
            return true;
    }
    return false;
}

Digraph two_two_cycles()
{
    return Digraph::from_arcs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
}

}   // namespace

TEST(Digraph, Construction)
{
    EXPECT_THROW(Digraph(3, {0, 1, 0, 0, 1, 0, 0, 0, 0}), DomainError);   // loop at 1
    EXPECT_THROW(Digraph(2, {0, 2, 0, 0}), DomainError);
    EXPECT_EQ(Digraph::complete(4).arc_count(), 12);
    EXPECT_EQ(Digraph::from_index(4, 0).arc_count(), 0);
    EXPECT_EQ(Digraph::from_index(4, 4095).arc_count(), 12);
    const Digraph g = Digraph::from_index(3, 1);
    EXPECT_TRUE(g.has_arc(0, 1));
    EXPECT_EQ(g.arc_count(), 1);
}

TEST(Digraph, ParseRoundTrip)
{
    const Digraph g = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const Digraph h = Digraph::parse(g.str());
    EXPECT_EQ(h.str(), g.str());
    EXPECT_TRUE(h.has_arc(0, 2));
}

TEST(Digraph, ParseErrors)
{
    EXPECT_THROW(Digraph::parse(""), ParseError);
    EXPECT_THROW(Digraph::parse("3\n0 1 0\n0 0 1\n"), ParseError);
    EXPECT_THROW(Digraph::parse("3\n0 1 0\n0 0 1\n1 0 x\n"), ParseError);
    EXPECT_THROW(Digraph::parse("3\n1 1 0\n0 0 1\n1 0 0\n"), ParseError);
    EXPECT_THROW(Digraph::parse("3\n0 1 0\n0 0 1\n1 0 0\n1\n"), ParseError);
    EXPECT_THROW(Digraph::parse("3\n0 2 0\n0 0 1\n1 0 0\n"), ParseError);
}

TEST(Oracle, Examples)
{
    EXPECT_TRUE(oracle_is_hamiltonian(Digraph::from_permutation(Permutation({1, 2, 3, 0}))));
    EXPECT_FALSE(oracle_is_hamiltonian(Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 0}})));
    EXPECT_FALSE(oracle_is_hamiltonian(two_two_cycles()));
    EXPECT_TRUE(oracle_is_hamiltonian(Digraph::complete(5)));
}

TEST(Oracle, AgreesWithTourEnumeration)
{
    for (std::uint64_t bits = 0; bits < 4096; ++bits)
    {
        const Digraph g = Digraph::from_index(4, bits);
        ASSERT_EQ(oracle_is_hamiltonian(g), contains_tour(g)) << bits;
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k)
    {
        const Digraph g = Digraph::from_index(5, rng() & ((1u << 20) - 1));
        ASSERT_EQ(oracle_is_hamiltonian(g), contains_tour(g)) << g.str();
    }
}

TEST(BruteMax, Examples)
{
    const PointSet ps = build_point_set(4, eps("1"));
    const MaxOverPoints k4 = brute_max(Digraph::complete(4), ps);
    EXPECT_EQ(k4.value, 8);
    EXPECT_EQ(k4.perm_class, PermClass::Tour);

    EXPECT_EQ(brute_max(Digraph::from_index(4, 0), ps).value, 0);
    EXPECT_EQ(brute_max(Digraph::from_index(4, 0), build_point_set(4, eps("7/3"))).value, 0);

    const MaxOverPoints split = brute_max(two_two_cycles(), ps);
    EXPECT_EQ(split.value, 5);
    EXPECT_EQ(split.perm_class, PermClass::IrreflexiveNonTour);
}

TEST(Decide, Examples)
{
    const PointSet ps4 = build_point_set(4, eps("1"));
    const EpsilonVerdict good4 = is_epsilon_good(ps4);
    ASSERT_TRUE(good4.good);

    const DecisionReport k4 = lp_decide(Digraph::complete(4), ps4, good4, "k4");
    EXPECT_EQ(k4.lp_value, 8);
    EXPECT_TRUE(k4.lp_hamiltonian);
    EXPECT_TRUE(k4.consistent());

    const DecisionReport split = lp_decide(two_two_cycles(), ps4, good4);
    EXPECT_EQ(split.lp_value, 5);
    EXPECT_FALSE(split.lp_hamiltonian);
    EXPECT_TRUE(split.consistent());

    const PointSet ps5 = build_point_set(5, eps("1"));
    const DecisionReport c5 = lp_decide_unchecked(Digraph::from_permutation(Permutation({1, 2, 3, 4, 0})), ps5);
    EXPECT_EQ(c5.lp_value, 10);
    EXPECT_TRUE(c5.lp_hamiltonian);
    EXPECT_TRUE(c5.consistent());
}

TEST(Decide, RejectsBadOrMismatchedVerdict)
{
    const PointSet ps4 = build_point_set(4, eps("1"));
    const EpsilonVerdict other = is_epsilon_good(4, eps("2"));
    EXPECT_THROW(lp_decide(Digraph::complete(4), ps4, other), ConfigError);

    const PointSet ps5 = build_point_set(5, eps("5"));
    const EpsilonVerdict bad = is_epsilon_good(ps5);
    ASSERT_FALSE(bad.good);
    EXPECT_THROW(lp_decide(Digraph::complete(5), ps5, bad), ConfigError);
}

TEST(Decide, DumpsLp)
{
    const PointSet ps4 = build_point_set(4, eps("1"));
    std::ostringstream os;
    lp_decide_unchecked(Digraph::complete(4), ps4, "k4", &os);
    EXPECT_NE(os.str().find("# lp"), std::string::npos);
    EXPECT_NE(os.str().find("vars 24"), std::string::npos);
}

TEST(TheoremBounds, Examples)
{
    const PointSet ps = build_point_set(4, eps("1"));
    const TheoremCheck k4 = check_theorem_bounds(Digraph::complete(4), ps);
    EXPECT_TRUE(k4.ok());
    EXPECT_TRUE(k4.hamiltonian);
    EXPECT_LE(k4.nontour_max, 7);

    const TheoremCheck split = check_theorem_bounds(two_two_cycles(), ps);
    EXPECT_TRUE(split.ok());
    EXPECT_EQ(split.tour_max, 4);

    const TheoremCheck cycle = check_theorem_bounds(Digraph::from_permutation(Permutation({1, 2, 3, 0})), ps);
    EXPECT_TRUE(cycle.ok());
    EXPECT_EQ(cycle.tour_max, 8);
}

TEST(Decide, RandomGraphsAtFive)
{
    const PointSet ps = build_point_set(5, eps("1"));
    std::mt19937_64 rng(11);
    for (int k = 0; k < 40; ++k)
    {
        const Digraph g = Digraph::from_index(5, rng() & ((1u << 20) - 1));
        const DecisionReport r = lp_decide_unchecked(g, ps);
        EXPECT_TRUE(r.consistent()) << g.str();
        EXPECT_EQ(r.lp_value, r.brute_value);
    }
}
