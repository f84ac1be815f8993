#include "schemekit/report.hpp"

#include "schemekit/modular.hpp"
#include "schemekit/structure.hpp"

#include <algorithm>

namespace schemekit {

bool AnalysisReport::has_disagreement() const noexcept
{
    return std::any_of(primes.begin(), primes.end(),
                       [](const PrimeAnalysis& a) { return a.methods_agree.has_value() && !*a.methods_agree; });
}

PrimeAnalysis analyze_prime(const Scheme& s, Prime p)
{
    const auto space = fixed_space(s, p);
    const bool oracle = space.dim() == 1;
    PrimeAnalysis a{
        .prime = p,
        .is_quasi_thin = is_quasi_thin(s),
        .has_thin_thin_residue = has_thin_thin_residue(s),
        .is_p_prime_valenced = is_p_prime_valenced(s, p),
        .thin_radical = thin_radical(s),
        .thin_residue = thin_residue(s),
        .min_singular = min_singular(s),
        .s_p_prime_closure = closure(s, p_prime_relations(s, p)),
        .fixed_space_dim = space.dim(),
        .transitive_oracle = oracle,
        .transitive_structural = std::nullopt,
        .structural_method = std::nullopt,
        .methods_agree = std::nullopt,
    };
    const std::optional<bool> by_a = a.is_quasi_thin ? std::optional(theorem_a_decide(s, p)) : std::nullopt;
    const std::optional<bool> by_b = a.has_thin_thin_residue ? std::optional(theorem_b_decide(s, p)) : std::nullopt;
    if (by_a || by_b) {
        a.structural_method = by_a ? Method::theorem_a : Method::theorem_b;
        a.transitive_structural = by_a ? *by_a : *by_b;
        a.methods_agree = (!by_a || *by_a == oracle) && (!by_b || *by_b == oracle);
    }
    return a;
}

AnalysisReport analyze(std::string id, const Scheme& s, std::span<const Prime> primes)
{
    AnalysisReport r;
    r.id = std::move(id);
    r.order = s.order();
    r.d = s.d();
    r.valencies.assign(s.valencies().begin(), s.valencies().end());
    r.primes.reserve(primes.size());
    for (auto p : primes) r.primes.push_back(analyze_prime(s, p));
    return r;
}

AnalysisReport failed_entry(std::string id, EntryError kind, std::string message)
{
    AnalysisReport r;
    r.id = std::move(id);
    r.error = kind;
    r.error_message = std::move(message);
    return r;
}

}  // namespace schemekit
