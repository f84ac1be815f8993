/**
 * @file core.hpp
 * @brief Association scheme data model: intersection numbers, relation
 *        matrices, and the validated Scheme.
 *
 * An IntersectionTensor is raw data. A Scheme is only obtained through
 * validate_tensor(), which checks the defining identities of the
 * intersection numbers and fills in valencies and the involution i -> i*.
 * Everything downstream works on the (d+1)^3 structure constants and never
 * touches |X| x |X| matrices.
 */
#pragma once

#include "schemekit/relation_subset.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace schemekit {

/// Largest class d for which a RelationSubset fits one machine word.
inline constexpr std::size_t single_word_class_cap = 63;

/// Structure constants p_ij^k of a scheme of class d on |X| = order points.
class IntersectionTensor {
public:
    IntersectionTensor() = default;
    /// entries is the row-major (i, j, k) flattening; shape errors throw AxiomViolation(shape).
    IntersectionTensor(std::size_t d, std::int64_t order, std::vector<std::int64_t> entries);

    std::size_t d() const noexcept { return d_; }
    std::size_t rank() const noexcept { return d_ + 1; }
    std::int64_t order() const noexcept { return order_; }

    std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept
    {
        return entries_[(i * rank() + j) * rank() + k];
    }
    std::span<const std::int64_t> entries() const noexcept { return entries_; }

    friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

private:
    std::size_t d_ = 0;
    std::int64_t order_ = 1;
    std::vector<std::int64_t> entries_{1};
};

/// n x n array of relation indices describing a partition of X x X.
class RelationMatrix {
public:
    /// Checks the partition invariants; throws MalformedMatrix on the first offending cell.
    RelationMatrix(std::size_t n, std::vector<std::uint32_t> cells);

    std::size_t n() const noexcept { return n_; }
    /// Largest relation index present.
    std::size_t d() const noexcept { return d_; }
    std::uint32_t operator()(std::size_t x, std::size_t y) const noexcept { return cells_[x * n_ + y]; }
    std::span<const std::uint32_t> row(std::size_t x) const noexcept { return {cells_.data() + x * n_, n_}; }

    friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

private:
    std::size_t n_;
    std::size_t d_;
    std::vector<std::uint32_t> cells_;
};

enum class CountCheck {
    spot,   // up to three representatives per relation
    strict, // every pair of X x X
};

/// Counts p_ij^k = |{z : (x,z) in R_i, (z,y) in R_j}| for representatives (x,y) of each R_k.
/// Throws NotAScheme when two representatives of one relation disagree, or when
/// the transpose of a relation is not a relation.
IntersectionTensor tensor_from_relation_matrix(const RelationMatrix& m,
                                               CountCheck check = CountCheck::spot);

struct ValidateOptions {
    /// Permit d > single_word_class_cap (subsets then use several words).
    bool allow_wide_class = false;
};

class Scheme;

/// Checks every identity of the intersection numbers and returns the Scheme.
/// Throws AxiomViolation naming the failed identity, or ArithmeticOverflow.
Scheme validate_tensor(IntersectionTensor t, ValidateOptions options = {});

/// A validated association scheme. Immutable; safe to share across threads.
class Scheme {
public:
    const IntersectionTensor& tensor() const noexcept { return tensor_; }
    std::size_t d() const noexcept { return tensor_.d(); }
    std::size_t rank() const noexcept { return tensor_.rank(); }
    std::int64_t order() const noexcept { return tensor_.order(); }

    std::int64_t p(std::size_t i, std::size_t j, std::size_t k) const noexcept { return tensor_(i, j, k); }
    std::int64_t valency(std::size_t i) const noexcept { return valency_[i]; }
    std::span<const std::int64_t> valencies() const noexcept { return valency_; }
    /// i -> i*
    std::size_t star(std::size_t i) const noexcept { return involution_[i]; }
    std::span<const std::size_t> involution() const noexcept { return involution_; }
    std::int64_t max_valency() const noexcept;

    /// {R_k : p_ij^k > 0}, precomputed.
    const RelationSubset& product_support(std::size_t i, std::size_t j) const noexcept
    {
        return support_[i * rank() + j];
    }

    RelationSubset empty_subset() const { return RelationSubset(rank()); }
    RelationSubset full_subset() const { return RelationSubset::full(rank()); }
    RelationSubset singleton(std::size_t i) const;

private:
    friend Scheme validate_tensor(IntersectionTensor, ValidateOptions);
    Scheme(IntersectionTensor tensor, std::vector<std::int64_t> valency, std::vector<std::size_t> involution);

    IntersectionTensor tensor_;
    std::vector<std::int64_t> valency_;
    std::vector<std::size_t> involution_;
    std::vector<RelationSubset> support_;
};

}  // namespace schemekit
