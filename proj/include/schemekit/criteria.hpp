/**
 * @file criteria.hpp
 * @brief Structural p-transitivity criteria and their cross-check against
 *        the fixed-space computation.
 *
 *  - quasi-thin schemes (all k_i <= 2): transitive iff p > 2, or p = 2 and
 *    the thin residue times the thin radical is all of S;
 *  - schemes whose thin residue is thin: transitive iff S_p' generates S.
 */
#pragma once

#include "schemekit/core.hpp"
#include "schemekit/prime.hpp"

#include <optional>
#include <string_view>

namespace schemekit {

bool is_quasi_thin(const Scheme& s);
bool has_thin_thin_residue(const Scheme& s);
bool is_p_prime_valenced(const Scheme& s, Prime p);

/// Criterion for quasi-thin schemes. Throws NotQuasiThin otherwise.
bool theorem_a_decide(const Scheme& s, Prime p);

/// Criterion for schemes with thin thin residue. Throws NotApplicable otherwise.
bool theorem_b_decide(const Scheme& s, Prime p);

enum class Method { oracle, theorem_a, theorem_b };
enum class MethodRequest { oracle, structural, both };

std::string_view method_name(Method m) noexcept;
/// Parses "oracle" / "structural" / "both"; nullopt otherwise.
std::optional<MethodRequest> parse_method_request(std::string_view text) noexcept;

struct Decision {
    Prime prime;
    /// Verdict of `method` (for `both`, the oracle's verdict).
    bool transitive;
    /// The method that produced `transitive` for oracle/structural requests;
    /// for `both`, the structural method if one applies, else oracle.
    Method method;
    /// True for oracle and structural requests; for `both`, whether a
    /// structural criterion covered the scheme.
    bool applicable;
    std::optional<bool> oracle_verdict;
    std::optional<bool> structural_verdict;
    /// Set iff both methods produced a verdict.
    std::optional<bool> agreement;
};

/// Structural verdict with the method that produced it, or nullopt when
/// neither criterion applies. When both apply, the quasi-thin criterion is
/// reported and the thin-residue criterion must agree (else std::logic_error).
std::optional<std::pair<Method, bool>> structural_decide(const Scheme& s, Prime p);

/// Throws MethodNotApplicable for a structural request neither criterion covers.
Decision decide(const Scheme& s, Prime p, MethodRequest request);

}  // namespace schemekit
