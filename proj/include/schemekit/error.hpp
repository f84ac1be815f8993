/**
 * @file error.hpp
 * @brief Exception types raised by schemekit.
 *
 * Every failure is an exception derived from schemekit::Error. The CLI maps
 * the families below onto its exit codes (parse/IO, validation,
 * not-applicable).
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace schemekit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- input ---------------------------------------------------------------

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class DuplicateId : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// ---- validation ----------------------------------------------------------

/// A relation matrix that does not describe a partition of X x X with R_0 on the diagonal.
class MalformedMatrix : public Error {
public:
    MalformedMatrix(const std::string& what, std::size_t row, std::size_t column);

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

/// Counting z over two representatives of one relation gave different numbers.
class NotAScheme : public Error {
public:
    using Error::Error;
};

/// Which identity of the intersection numbers failed.
enum class Identity {
    shape,            // wrong dimensions, negative entry, order < 1
    class_too_large,  // d above the single-word cap without the wide flag
    identity_relation,
    involution,
    valency_symmetry, // k_i = k_{i*}
    row_sum,          // sum_u p_iu^j = k_i
    valency_product,  // k_i k_j = sum_u p_ij^u k_u
    triangle,         // k_l p_ij^l = k_i p_lj*^i = k_j p_i*l^j
    order_sum,        // sum_i k_i = |X|
};

const char* identity_name(Identity id) noexcept;

class AxiomViolation : public Error {
public:
    AxiomViolation(Identity identity, std::array<std::size_t, 3> indices, std::int64_t lhs,
                   std::int64_t rhs, const std::string& detail);

    Identity identity() const noexcept { return identity_; }
    const std::array<std::size_t, 3>& indices() const noexcept { return indices_; }
    std::int64_t lhs() const noexcept { return lhs_; }
    std::int64_t rhs() const noexcept { return rhs_; }

private:
    Identity identity_;
    std::array<std::size_t, 3> indices_;
    std::int64_t lhs_;
    std::int64_t rhs_;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

// ---- argument errors -----------------------------------------------------

class EmptyOperand : public Error {
public:
    using Error::Error;
};

/// Two operands belong to schemes of different class, or an index is out of range.
class SchemeMismatch : public Error {
public:
    using Error::Error;
};

class NotClosed : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class NotQuasiThin : public NotApplicable {
public:
    using NotApplicable::NotApplicable;
};

class ValencyNotTwo : public NotApplicable {
public:
    using NotApplicable::NotApplicable;
};

/// Neither structural criterion covers the scheme.
class MethodNotApplicable : public NotApplicable {
public:
    using NotApplicable::NotApplicable;
};

/// A product of two valency-2 relations fits none of the five shapes.
class NoCaseMatches : public Error {
public:
    using Error::Error;
};

}  // namespace schemekit
