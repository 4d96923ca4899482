#pragma once

#include <array>
#include <optional>

#include "tedpoly/permutations.hpp"

namespace tedpoly {

/** Published extreme-point count triple for one (n, eps) cell. */
struct ReferenceCell
{
    int n;
    int eps;
    ClassCounts counts;
};

/** Published counts for n = 4, 5, 6 and eps = 1, 5, 10, 20. */
inline constexpr std::array<ReferenceCell, 12> kReferenceTable{{
    {4, 1, {6, 3, 15}},
    {4, 5, {6, 3, 15}},
    {4, 10, {6, 3, 15}},
    {4, 20, {6, 3, 15}},
    {5, 1, {24, 20, 76}},
    {5, 5, {24, 0, 76}},
    {5, 10, {24, 0, 76}},
    {5, 20, {24, 0, 76}},
    {6, 1, {120, 145, 455}},
    {6, 5, {120, 26, 455}},
    {6, 10, {120, 19, 455}},
    {6, 20, {120, 13, 455}},
}};

/** Published Birkhoff vertex classification for n = 4, 5, 6. */
inline constexpr std::array<ReferenceCell, 3> kReferenceBirkhoff{{
    {4, 0, {6, 3, 15}},
    {5, 0, {24, 20, 76}},
    {6, 0, {120, 145, 455}},
}};

inline constexpr std::array<int, 4> kReferenceEpsilons{1, 5, 10, 20};

/** Lookup of the published cell; `eps` must be an integer epsilon. */
inline std::optional<ClassCounts> reference_counts(int n, int eps)
{
    for (const auto& cell : kReferenceTable)
        if (cell.n == n && cell.eps == eps)
            return cell.counts;
    return std::nullopt;
}

}   // namespace tedpoly
