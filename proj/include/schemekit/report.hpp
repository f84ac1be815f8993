#pragma once

#include "schemekit/core.hpp"
#include "schemekit/criteria.hpp"
#include "schemekit/prime.hpp"
#include "schemekit/relation_subset.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schemekit {

/// Everything computed for one (scheme, prime) pair.
struct PrimeAnalysis {
    Prime prime;
    bool is_quasi_thin;
    bool has_thin_thin_residue;
    bool is_p_prime_valenced;
    RelationSubset thin_radical;
    RelationSubset thin_residue;
    RelationSubset min_singular;
    RelationSubset s_p_prime_closure;
    std::size_t fixed_space_dim;
    bool transitive_oracle;
    /// nullopt when neither structural criterion applies.
    std::optional<bool> transitive_structural;
    std::optional<Method> structural_method;
    /// Set iff the structural criterion ran alongside the oracle.
    std::optional<bool> methods_agree;
};

enum class EntryError { none, parse, validation };

struct AnalysisReport {
    std::string id;
    std::int64_t order = 0;
    std::size_t d = 0;
    std::vector<std::int64_t> valencies;
    std::vector<PrimeAnalysis> primes;

    EntryError error = EntryError::none;
    std::string error_message;

    bool ok() const noexcept { return error == EntryError::none; }
    /// Some prime had both methods run and disagree.
    bool has_disagreement() const noexcept;
};

PrimeAnalysis analyze_prime(const Scheme& s, Prime p);
AnalysisReport analyze(std::string id, const Scheme& s, std::span<const Prime> primes);
AnalysisReport failed_entry(std::string id, EntryError kind, std::string message);

}  // namespace schemekit
