#include "tedpoly/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "tedpoly/errors.hpp"

namespace tedpoly {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty()
        && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}   // namespace

Rational::Rational(long long value)
{
    value_ = mpq_class(mpz_class(std::to_string(value), 10));
}

Rational::Rational(const mpq_class& value) : value_(value)
{
    value_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw ArithmeticError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw ArithmeticError("malformed rational literal: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den))
        throw ArithmeticError("malformed rational literal: '" + std::string(text) + "'");
    return Rational(parse_integer(num), parse_integer(den));
}

std::string Rational::str() const
{
    return value_.get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw ArithmeticError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational normalize(const BigInt& num, const BigInt& den)
{
    return Rational(num, den);
}

bool ExactVector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("matrix entry count does not match rows x cols");
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows)
    {
        if (r.size() != cols)
            throw DimensionError("rows of unequal length");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return ExactMatrix(rows.size(), cols, std::move(entries));
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw DimensionError("dot product of vectors with different lengths");
    mpq_class sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (!a[i].is_zero() && !b[i].is_zero())
            sum += a[i].raw() * b[i].raw();
    }
    return Rational(sum);
}

std::size_t rank(const ExactMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<mpq_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r * cols + c] = m(r, c).raw();

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(a[pivot * cols + c]) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);

        const mpq_class inv = 1 / a[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r)
        {
            if (sgn(a[r * cols + c]) == 0)
                continue;
            const mpq_class factor = a[r * cols + c] * inv;
            for (std::size_t k = c; k < cols; ++k)
                a[r * cols + k] -= factor * a[rank * cols + k];
        }
        ++rank;
    }
    return rank;
}

BigInt common_denominator(std::span<const Rational> values)
{
    BigInt l = 1;
    for (const auto& v : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    return l;
}

}   // namespace tedpoly
