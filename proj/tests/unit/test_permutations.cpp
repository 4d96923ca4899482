#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "tedpoly/errors.hpp"
#include "tedpoly/permutations.hpp"
#include "tedpoly/reference_table.hpp"

using namespace tedpoly;

TEST(Permutations, EnumerationSizes)
{
    EXPECT_EQ(enumerate_permutations(3).size(), 6u);
    EXPECT_EQ(enumerate_permutations(4).size(), 24u);
    EXPECT_EQ(enumerate_permutations(6).size(), 720u);
}

TEST(Permutations, EnumerationIsLexicographicAndDistinct)
{
    const auto perms = enumerate_permutations(5);
    EXPECT_EQ(perms.front(), Permutation::identity(5));
    EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
    std::set<Permutation> distinct(perms.begin(), perms.end());
    EXPECT_EQ(distinct.size(), perms.size());
}

TEST(Permutations, OrderGuard)
{
    EXPECT_THROW(enumerate_permutations(2), DomainError);
    EXPECT_THROW(class_counts(kMaxOrder + 1), DomainError);
    EXPECT_NO_THROW(check_order(kMinOrder));
}

TEST(Permutations, RejectsNonBijections)
{
    EXPECT_THROW(Permutation({0, 0, 1}), DomainError);
    EXPECT_THROW(Permutation({0, 1, 3}), DomainError);
    EXPECT_THROW(Permutation({-1, 0, 1}), DomainError);
}

TEST(Permutations, Classify)
{
    EXPECT_EQ(classify(Permutation({1, 2, 3, 0})), PermClass::Tour);
    EXPECT_EQ(classify(Permutation({1, 0, 3, 2})), PermClass::IrreflexiveNonTour);
    EXPECT_EQ(classify(Permutation({0, 1, 2, 3})), PermClass::ReflexiveNonTour);
    EXPECT_EQ(classify(Permutation({1, 0, 2, 3})), PermClass::ReflexiveNonTour);
    EXPECT_EQ(to_string(PermClass::IrreflexiveNonTour), "irreflexive_nontour");
}

TEST(Permutations, CycleType)
{
    EXPECT_EQ(Permutation({1, 2, 3, 0}).cycle_type(), (std::vector<int>{4}));
    EXPECT_EQ(cycle_type_string(Permutation({1, 0, 3, 2})), "2+2");
    EXPECT_EQ(cycle_type_string(Permutation({1, 0, 2, 3})), "2+1+1");
    EXPECT_EQ(Permutation({1, 0, 2, 3}).fixed_points(), 2);
}

TEST(Permutations, ClassCountsMatchPublishedBirkhoffColumn)
{
    for (const auto& cell : kReferenceBirkhoff)
        EXPECT_EQ(class_counts(cell.n), cell.counts) << "n=" << cell.n;
    EXPECT_EQ(class_counts(3), (ClassCounts{2, 0, 4}));
}

TEST(Permutations, ClassCountsMatchDerangementOracle)
{
    for (int n = kMinOrder; n <= 8; ++n)
    {
        const ClassCounts c = class_counts(n);
        EXPECT_EQ(c.total(), oracle::factorial(n));
        EXPECT_EQ(c.tours, oracle::factorial(n - 1));
        EXPECT_EQ(c.tours + c.irreflexive_nontours, oracle::derangements(n));
        EXPECT_EQ(c.reflexive_nontours, oracle::factorial(n) - oracle::derangements(n));
    }
}

TEST(Permutations, ClassMatchesCycleTypeForAll)
{
    for (int n = kMinOrder; n <= 6; ++n)
        for (const auto& p : enumerate_permutations(n))
        {
            const auto type = p.cycle_type();
            PermClass expected = PermClass::IrreflexiveNonTour;
            if (type.back() == 1)
                expected = PermClass::ReflexiveNonTour;
            else if (type.size() == 1)
                expected = PermClass::Tour;
            EXPECT_EQ(classify(p), expected) << p.str();
        }
}

TEST(Permutations, ToMatrix)
{
    EXPECT_EQ(to_matrix(Permutation::identity(4)), ExactMatrix::identity(4));
    const ExactMatrix m = to_matrix(Permutation({1, 2, 3, 0}));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            EXPECT_EQ(m(r, c), c == (r + 1) % 4 ? 1 : 0);
    const ExactMatrix b = to_matrix(Permutation({1, 0, 3, 2}));
    EXPECT_EQ(b(0, 1), 1);
    EXPECT_EQ(b(1, 0), 1);
    EXPECT_EQ(b(2, 3), 1);
    EXPECT_EQ(b(3, 2), 1);
    EXPECT_EQ(b(0, 2), 0);
}

TEST(Permutations, CountsString)
{
    EXPECT_EQ((ClassCounts{6, 3, 15}).str(), "6-3-15");
}
