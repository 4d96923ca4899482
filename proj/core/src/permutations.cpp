#include "tedpoly/permutations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tedpoly/errors.hpp"

namespace tedpoly {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    const int n = size();
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_)
    {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw DomainError("permutation image is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

std::vector<int> Permutation::cycle_type() const
{
    std::vector<int> lengths;
    std::vector<bool> seen(image_.size(), false);
    for (int start = 0; start < size(); ++start)
    {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        int length = 0;
        for (int v = start; !seen[static_cast<std::size_t>(v)]; v = (*this)[v])
        {
            seen[static_cast<std::size_t>(v)] = true;
            ++length;
        }
        lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

int Permutation::fixed_points() const
{
    int count = 0;
    for (int i = 0; i < size(); ++i)
        count += (*this)[i] == i ? 1 : 0;
    return count;
}

std::string Permutation::str() const
{
    std::string out;
    for (std::size_t i = 0; i < image_.size(); ++i)
    {
        if (i > 0)
            out += ' ';
        out += std::to_string(image_[i]);
    }
    return out;
}

std::string_view to_string(PermClass c)
{
    switch (c)
    {
        case PermClass::Tour: return "tour";
        case PermClass::IrreflexiveNonTour: return "irreflexive_nontour";
        case PermClass::ReflexiveNonTour: return "reflexive_nontour";
    }
    return "unknown";
}

void ClassCounts::add(PermClass c)
{
    switch (c)
    {
        case PermClass::Tour: ++tours; break;
        case PermClass::IrreflexiveNonTour: ++irreflexive_nontours; break;
        case PermClass::ReflexiveNonTour: ++reflexive_nontours; break;
    }
}

std::string ClassCounts::str() const
{
    return std::to_string(tours) + "-" + std::to_string(irreflexive_nontours) + "-"
         + std::to_string(reflexive_nontours);
}

void check_order(int n)
{
    if (n < kMinOrder || n > kMaxOrder)
        throw DomainError("n = " + std::to_string(n) + " outside supported range ["
                          + std::to_string(kMinOrder) + ", " + std::to_string(kMaxOrder) + "]");
}

std::vector<Permutation> enumerate_permutations(int n)
{
    check_order(n);
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);

    std::vector<Permutation> out;
    do
    {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

PermClass classify(const Permutation& p)
{
    if (p.fixed_points() > 0)
        return PermClass::ReflexiveNonTour;

    // Length of the cycle through vertex 0.
    int length = 1;
    for (int v = p[0]; v != 0; v = p[v])
        ++length;
    return length == p.size() ? PermClass::Tour : PermClass::IrreflexiveNonTour;
}

ClassCounts class_counts(int n)
{
    ClassCounts counts;
    for (const auto& p : enumerate_permutations(n))
        counts.add(classify(p));
    return counts;
}

ExactMatrix to_matrix(const Permutation& p)
{
    const auto n = static_cast<std::size_t>(p.size());
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, static_cast<std::size_t>(p[static_cast<int>(i)])) = 1;
    return m;
}

std::string cycle_type_string(const Permutation& p)
{
    std::string out;
    for (int len : p.cycle_type())
    {
        if (!out.empty())
            out += '+';
        out += std::to_string(len);
    }
    return out;
}

}   // namespace tedpoly
