#include "tedpoly/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "tedpoly/errors.hpp"

namespace tedpoly::dd {

namespace {

class Bits
{
public:
    explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bits operator&(const Bits& o) const
    {
        Bits out = *this;
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] &= o.words_[k];
        return out;
    }

    bool contains(const Bits& o) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((o.words_[k] & ~words_[k]) != 0)
                return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray
{
    IntVector v;
    Bits zero;
};

bool lex_less(const IntVector& a, const IntVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const BigInt& x, const BigInt& y) { return cmp(x, y) < 0; });
}

/** Indices of a maximal linearly independent subset of rows, chosen greedily in order. */
std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows, std::size_t dim)
{
    std::vector<std::vector<mpq_class>> echelon;   // each with a pivot column
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < rows.size() && chosen.size() < dim; ++r)
    {
        std::vector<mpq_class> v(dim);
        for (std::size_t k = 0; k < dim; ++k)
            v[k] = rows[r][k];
        for (std::size_t e = 0; e < echelon.size(); ++e)
        {
            const std::size_t pc = pivots[e];
            if (sgn(v[pc]) == 0)
                continue;
            const mpq_class f = v[pc] / echelon[e][pc];
            for (std::size_t k = 0; k < dim; ++k)
                v[k] -= f * echelon[e][k];
        }
        const auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) != 0; });
        if (it == v.end())
            continue;
        pivots.push_back(static_cast<std::size_t>(it - v.begin()));
        echelon.push_back(std::move(v));
        chosen.push_back(r);
    }
    return chosen;
}

/** Columns of the inverse of the square matrix formed by `rows`, as primitive integer vectors. */
std::vector<IntVector> inverse_columns(const std::vector<IntVector>& rows)
{
    const std::size_t d = rows.size();
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(2 * d));
    for (std::size_t i = 0; i < d; ++i)
    {
        for (std::size_t k = 0; k < d; ++k)
            a[i][k] = rows[i][k];
        a[i][d + i] = 1;
    }
    for (std::size_t c = 0; c < d; ++c)
    {
        std::size_t p = c;
        while (sgn(a[p][c]) == 0)
            ++p;
        std::swap(a[p], a[c]);
        const mpq_class inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t r = 0; r < d; ++r)
        {
            if (r == c || sgn(a[r][c]) == 0)
                continue;
            const mpq_class f = a[r][c];
            for (std::size_t k = 0; k < 2 * d; ++k)
                a[r][k] -= f * a[c][k];
        }
    }

    std::vector<IntVector> cols(d);
    for (std::size_t k = 0; k < d; ++k)
    {
        BigInt l = 1;
        for (std::size_t i = 0; i < d; ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][d + k].get_den_mpz_t());
        IntVector v(d);
        for (std::size_t i = 0; i < d; ++i)
        {
            mpq_class scaled = a[i][d + k] * l;
            v[i] = scaled.get_num();
        }
        cols[k] = primitive(std::move(v));
    }
    return cols;
}

}   // namespace

IntVector primitive(IntVector v)
{
    BigInt g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
    {
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return v;
}

BigInt inner(const IntVector& a, const IntVector& b)
{
    BigInt s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        mpz_addmul(s.get_mpz_t(), a[k].get_mpz_t(), b[k].get_mpz_t());
    return s;
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& constraints, Stats* stats)
{
    if (constraints.empty())
        throw DimensionError("double description needs at least one constraint");
    const std::size_t dim = constraints.front().size();
    for (const auto& h : constraints)
        if (h.size() != dim)
            throw DimensionError("constraint rows of unequal length");

    const auto basis = independent_rows(constraints, dim);
    if (basis.size() < dim)
        throw DimensionError("constraints have rank " + std::to_string(basis.size()) + " < " + std::to_string(dim)
                             + "; the cone is not pointed");

    const std::size_t m = constraints.size();
    std::vector<IntVector> basis_rows;
    for (auto r : basis)
        basis_rows.push_back(constraints[r]);
    const auto initial = inverse_columns(basis_rows);

    std::vector<Ray> rays;
    for (std::size_t k = 0; k < dim; ++k)
    {
        Ray ray{initial[k], Bits(m)};
        for (std::size_t j = 0; j < dim; ++j)
            if (j != k)
                ray.zero.set(basis[j]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> processed(m, false);
    for (auto r : basis)
        processed[r] = true;

    Stats local;
    local.max_intermediate_rays = rays.size();

    for (std::size_t c = 0; c < m; ++c)
    {
        if (processed[c])
            continue;
        const IntVector& h = constraints[c];

        std::vector<BigInt> value(rays.size());
        std::vector<std::size_t> pos;
        std::vector<std::size_t> neg;
        for (std::size_t r = 0; r < rays.size(); ++r)
        {
            value[r] = inner(h, rays[r].v);
            const int s = sgn(value[r]);
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
        }

        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r)
        {
            if (sgn(value[r]) >= 0)
            {
                next.push_back(rays[r]);
                if (sgn(value[r]) == 0)
                    next.back().zero.set(c);
            }
        }

        for (auto p : pos)
        {
            for (auto q : neg)
            {
                ++local.adjacency_tests;
                Bits common = rays[p].zero & rays[q].zero;
                if (common.count() + 2 < dim)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                {
                    if (r != p && r != q && rays[r].zero.contains(common))
                        adjacent = false;
                }
                if (!adjacent)
                    continue;

                IntVector v(dim);
                for (std::size_t k = 0; k < dim; ++k)
                {
                    v[k] = value[p] * rays[q].v[k];
                    mpz_submul(v[k].get_mpz_t(), value[q].get_mpz_t(), rays[p].v[k].get_mpz_t());
                }
                common.set(c);
                next.push_back(Ray{primitive(std::move(v)), std::move(common)});
            }
        }

        rays = std::move(next);
        processed[c] = true;
        local.max_intermediate_rays = std::max(local.max_intermediate_rays, rays.size());
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays)
        out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), lex_less);
    if (stats != nullptr)
        *stats = local;
    return out;
}

}   // namespace tedpoly::dd
