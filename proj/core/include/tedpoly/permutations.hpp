#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tedpoly/rational.hpp"

namespace tedpoly {

inline constexpr int kMinOrder = 3;
/** Largest n accepted by the enumeration functions (9! = 362880 permutations). */
inline constexpr int kMaxOrder = 9;

/**
 * Bijection on {0, ..., n-1}, stored as its image list.  Interpreted as the
 * 0/1 adjacency matrix with an arc i -> image[i].
 */
class Permutation
{
public:
    /** Throws DomainError unless `image` is a bijection on {0..n-1}. */
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& image() const { return image_; }

    /** Cycle lengths in non-increasing order (fixed points count as 1-cycles). */
    std::vector<int> cycle_type() const;
    int fixed_points() const;

    /** Space separated image, e.g. "1 2 3 0". */
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

enum class PermClass : std::uint8_t
{
    Tour,                 ///< single n-cycle, i.e. a directed Hamilton cycle
    IrreflexiveNonTour,   ///< no fixed point, at least two cycles
    ReflexiveNonTour,     ///< at least one fixed point
};

std::string_view to_string(PermClass c);

struct ClassCounts
{
    std::int64_t tours = 0;
    std::int64_t irreflexive_nontours = 0;
    std::int64_t reflexive_nontours = 0;

    std::int64_t total() const { return tours + irreflexive_nontours + reflexive_nontours; }
    void add(PermClass c);

    /** "t-i-r", the notation used for count triples. */
    std::string str() const;

    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/** Throws DomainError unless kMinOrder <= n <= kMaxOrder. */
void check_order(int n);

/** All n! permutations, lexicographic in the image list. */
std::vector<Permutation> enumerate_permutations(int n);

PermClass classify(const Permutation& p);

ClassCounts class_counts(int n);

/** n x n 0/1 matrix with entry [i, p[i]] = 1. */
ExactMatrix to_matrix(const Permutation& p);

/** Cycle type rendered as "4", "2+2", "2+1+1". */
std::string cycle_type_string(const Permutation& p);

}   // namespace tedpoly
