/**
 * @file structure.hpp
 * @brief Complex multiplication of relation subsets and the invariants built
 *        on it: closures, thin radical and residue, strongly normal and
 *        singular subsets, and the shape of products of valency-2 relations.
 *
 * All functions are pure in (scheme, arguments). Subsets passed in must
 * belong to the scheme's universe (SchemeMismatch otherwise).
 */
#pragma once

#include "schemekit/core.hpp"
#include "schemekit/prime.hpp"
#include "schemekit/relation_subset.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace schemekit {

/// UV = {R_i : p_uv^i > 0 for some R_u in U, R_v in V}. Throws EmptyOperand on empty input.
RelationSubset complex_product(const Scheme& s, const RelationSubset& u, const RelationSubset& v);

/// Left-associated product U_1 U_2 ... U_m.
RelationSubset complex_product(const Scheme& s, std::span<const RelationSubset> factors);

/// T* = {R_i* : R_i in T}.
RelationSubset star(const Scheme& s, const RelationSubset& t);

/// Smallest closed subset containing H (computed from H + H* + R_0 as a
/// fixpoint of complex multiplication).
RelationSubset closure(const Scheme& s, const RelationSubset& h);

/// T*T within T.
bool is_closed(const Scheme& s, const RelationSubset& t);

/// R_i* T R_i within T for every i. Throws NotClosed when T is not closed.
bool is_strongly_normal(const Scheme& s, const RelationSubset& t);

/// Relations of valency one.
RelationSubset thin_radical(const Scheme& s);

/// Closure of the union of all R_i* R_i.
RelationSubset thin_residue(const Scheme& s);

/// Thin residue times thin radical: the smallest singular subset.
RelationSubset min_singular(const Scheme& s);

/// Contains the thin radical, and R_x R_y* R_y R_z stays inside T for all
/// thin R_x, all R_y, and all R_z in T.
bool is_singular(const Scheme& s, const RelationSubset& t);

inline constexpr std::size_t default_max_free_bits = 24;

/// Every singular subset, sorted by (cardinality, bit pattern). Only supersets
/// of min_singular() are tested; throws TooLarge when more than
/// max_free_bits relations lie outside it.
std::vector<RelationSubset> enumerate_singular(const Scheme& s,
                                               std::size_t max_free_bits = default_max_free_bits);

inline constexpr std::size_t default_closed_enumeration_cap = 16;

/// Every closed subset, sorted by (cardinality, bit pattern). Breadth-first
/// over closures of generator sets; throws TooLarge when d > max_class.
std::vector<RelationSubset> enumerate_closed(const Scheme& s,
                                             std::size_t max_class = default_closed_enumeration_cap);

/// S_p' = {R_i : p does not divide k_i}.
RelationSubset p_prime_relations(const Scheme& s, Prime p);

/// The five possible shapes of A_a A_b when k_a = k_b = 2.
enum class QuasiThinShape {
    two_thin,         // 2A_u + 2A_v, k_u = k_v = 1
    double_two,       // 2A_u, k_u = 2
    thin_plus_two,    // 2A_u + A_v, k_u = 1, k_v = 2
    two_plus_two,     // A_u + A_v, k_u = k_v = 2
    single_four,      // A_u, k_u = 4
};

const char* shape_name(QuasiThinShape shape) noexcept;

struct QuasiThinCase {
    QuasiThinShape shape;
    std::size_t u;
    std::optional<std::size_t> v;

    friend bool operator==(const QuasiThinCase&, const QuasiThinCase&) = default;
};

/// Shape of A_a A_b for k_a = k_b = 2 in any scheme. Throws ValencyNotTwo, or
/// NoCaseMatches when the product fits none of the shapes.
QuasiThinCase classify_valency_two_product(const Scheme& s, std::size_t a, std::size_t b);

/// As above, but additionally requires the scheme to be quasi-thin (NotQuasiThin).
QuasiThinCase classify_quasi_thin_product(const Scheme& s, std::size_t a, std::size_t b);

}  // namespace schemekit
