/**
 * @file modular.hpp
 * @brief The adjacency algebra over GF(p) in the basis {A_0, ..., A_d}, and
 *        the space of vectors on which every A_i acts as the scalar k_i.
 *
 * Left multiplication by A_i is read off the structure constants:
 * A_i A_j = sum_k p_ij^k A_k, so column j of the matrix of A_i holds
 * (p_ij^0, ..., p_ij^d) mod p.
 */
#pragma once

#include "schemekit/core.hpp"
#include "schemekit/prime.hpp"
#include "schemekit/relation_subset.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace schemekit {

/// An element of GF(p).
class FpScalar {
public:
    FpScalar(Prime p, std::int64_t value) : p_(p), value_(p.reduce(value)) {}

    Prime prime() const noexcept { return p_; }
    std::uint64_t value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FpScalar operator+(const FpScalar& o) const;
    FpScalar operator-(const FpScalar& o) const;
    FpScalar operator*(const FpScalar& o) const;
    FpScalar operator-() const;
    /// Throws std::domain_error for zero.
    FpScalar inverse() const;

    friend bool operator==(const FpScalar&, const FpScalar&) = default;

private:
    FpScalar(Prime p, std::uint64_t reduced, int) : p_(p), value_(reduced) {}
    void require_same_field(const FpScalar& o) const;

    Prime p_;
    std::uint64_t value_;
};

/// Raw modular helpers on reduced residues.
namespace fp {
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
}  // namespace fp

/// Coordinates of sum_i c_i A_i over GF(p).
class FpVector {
public:
    FpVector(Prime p, std::size_t dim);
    FpVector(Prime p, std::span<const std::int64_t> coords);

    Prime prime() const noexcept { return p_; }
    std::size_t size() const noexcept { return coords_.size(); }
    std::uint64_t operator[](std::size_t i) const noexcept { return coords_[i]; }
    FpScalar at(std::size_t i) const { return FpScalar(p_, static_cast<std::int64_t>(coords_[i])); }
    void set(std::size_t i, const FpScalar& value);
    std::span<const std::uint64_t> coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    FpVector& operator+=(const FpVector& o);
    FpVector& operator-=(const FpVector& o);
    FpVector scaled(const FpScalar& c) const;
    friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
    friend FpVector operator-(FpVector a, const FpVector& b) { return a -= b; }

    friend bool operator==(const FpVector&, const FpVector&) = default;

private:
    friend class FpMatrix;
    void require_same_space(const FpVector& o) const;

    Prime p_;
    std::vector<std::uint64_t> coords_;
};

/// (d+1) x (d+1) matrix over GF(p).
class FpMatrix {
public:
    FpMatrix(Prime p, std::size_t dim);

    static FpMatrix identity(Prime p, std::size_t dim);

    Prime prime() const noexcept { return p_; }
    std::size_t dim() const noexcept { return dim_; }
    std::uint64_t operator()(std::size_t row, std::size_t col) const noexcept { return cells_[row * dim_ + col]; }
    void set(std::size_t row, std::size_t col, std::uint64_t reduced) { cells_[row * dim_ + col] = reduced % p_.value(); }

    FpVector operator*(const FpVector& v) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix& operator+=(const FpMatrix& o);
    FpMatrix scaled(std::uint64_t c) const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    Prime p_;
    std::size_t dim_;
    std::vector<std::uint64_t> cells_;
};

/// Matrix of left multiplication by A_i: entry (k, j) = p_ij^k mod p.
FpMatrix regular_rep_matrix(const Scheme& s, std::size_t i, Prime p);

/// A_i v, evaluated directly from the structure constants.
FpVector act(const Scheme& s, std::size_t i, const FpVector& v);

/// J = A_0 + ... + A_d.
FpVector all_ones(const Scheme& s, Prime p);

/// Sum of A_i over R_i in T. Throws EmptyOperand for the empty set.
FpVector indicator_vector(const Scheme& s, const RelationSubset& t, Prime p);

/// {R_i : c_i != 0}.
RelationSubset support(const FpVector& v);

/// A_i v = k_i v for every i.
bool is_fixed_vector(const Scheme& s, const FpVector& v);

struct FixedSpace {
    Prime prime;
    /// Reduced row echelon basis (each vector's leading coordinate is 1 and is
    /// zero in every other basis vector).
    std::vector<FpVector> basis;

    std::size_t dim() const noexcept { return basis.size(); }
    /// True when v is a GF(p)-combination of the basis.
    bool contains(const FpVector& v) const;
};

/// Solution space of (M_i - k_i I) v = 0 for all i, over GF(p).
FixedSpace fixed_space(const Scheme& s, Prime p);

/// The regular module has exactly one trivial submodule (fixed space is <J>).
bool is_p_transitive_oracle(const Scheme& s, Prime p);

/// Reduced row echelon form of the rows, zero rows dropped. Exposed for tests.
std::vector<FpVector> row_reduce(std::vector<FpVector> rows);

/// Basis of {v : M v = 0} for a rows x cols system (row-major, reduced mod p).
std::vector<FpVector> nullspace(Prime p, std::size_t rows, std::size_t cols,
                                std::vector<std::uint64_t> system);

}  // namespace schemekit
