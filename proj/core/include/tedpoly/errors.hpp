#pragma once

#include <stdexcept>

namespace tedpoly {

/** Base class of every exception thrown by the library. */
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/** Zero denominator, division by zero, malformed rational text. */
class ArithmeticError : public Error
{
public:
    using Error::Error;
};

/** Length or shape mismatch between operands. */
class DimensionError : public Error
{
public:
    using Error::Error;
};

/** Argument outside the supported range (n, epsilon, indices). */
class DomainError : public Error
{
public:
    using Error::Error;
};

/** An operation received a permutation of the wrong class. */
class ClassError : public Error
{
public:
    using Error::Error;
};

/** A decision was requested under a configuration that is not allowed. */
class ConfigError : public Error
{
public:
    using Error::Error;
};

/** Bisection endpoints do not bracket the good/not-good transition. */
class BracketError : public Error
{
public:
    using Error::Error;
};

/** Malformed input file. */
class ParseError : public Error
{
public:
    using Error::Error;
};

}   // namespace tedpoly
