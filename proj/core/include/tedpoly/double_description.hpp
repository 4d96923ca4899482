#pragma once

#include <cstddef>
#include <vector>

#include "tedpoly/rational.hpp"

namespace tedpoly::dd {

using IntVector = std::vector<BigInt>;

/** Divides out the gcd of all entries (the zero vector is returned unchanged). */
IntVector primitive(IntVector v);

BigInt inner(const IntVector& a, const IntVector& b);

struct Stats
{
    std::size_t max_intermediate_rays = 0;
    std::size_t adjacency_tests = 0;
};

/**
 * Extreme rays of the pointed polyhedral cone { y : h . y >= 0 for every row
 * h of `constraints` }, by the double description method with the
 * combinatorial adjacency test.  Rays are primitive integer vectors in
 * lexicographic order.  Throws DimensionError when the rows do not span the
 * whole space (the cone would not be pointed).
 */
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& constraints, Stats* stats = nullptr);

}   // namespace tedpoly::dd
