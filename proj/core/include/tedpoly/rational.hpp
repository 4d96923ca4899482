#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tedpoly {

using BigInt = mpz_class;

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator.  Thin value wrapper around GMP's `mpq_class`.
 */
class Rational
{
public:
    Rational() = default;
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long long value);               // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}
    explicit Rational(const mpq_class& value);

    /** num/den reduced to lowest terms; throws ArithmeticError when den == 0. */
    Rational(const BigInt& num, const BigInt& den);

    /** Parses "p/q" or "p" (optional leading sign, no spaces). */
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /** "p/q", or "p" when the denominator is 1. */
    std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/** Free-function form of the reduction contract: returns num/den in lowest terms. */
Rational normalize(const BigInt& num, const BigInt& den);

/** Fixed-length vector of rationals. */
class ExactVector
{
public:
    ExactVector() = default;
    explicit ExactVector(std::size_t length) : entries_(length) {}
    explicit ExactVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    ExactVector(std::initializer_list<Rational> entries) : entries_(entries) {}

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    std::span<const Rational> view() const { return entries_; }

    bool is_zero() const;

    friend bool operator==(const ExactVector&, const ExactVector&) = default;
    friend auto operator<=>(const ExactVector&, const ExactVector&) = default;

private:
    std::vector<Rational> entries_;
};

/** Dense row-major matrix of rationals. */
class ExactMatrix
{
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /** Throws DimensionError unless entries.size() == rows * cols. */
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    /** Builds a matrix from equal-length rows. */
    static ExactMatrix from_rows(const std::vector<ExactVector>& rows);
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const
    {
        return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
    }

    /** Row-major copy of all entries. */
    ExactVector flatten() const { return ExactVector(entries_); }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
inline Rational dot(const ExactVector& a, const ExactVector& b) { return dot(a.view(), b.view()); }

/** Exact rank by Gaussian elimination over the rationals. */
std::size_t rank(const ExactMatrix& m);

/** Least common multiple of the denominators of `values` (1 for an empty span). */
BigInt common_denominator(std::span<const Rational> values);

}   // namespace tedpoly
