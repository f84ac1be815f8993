#include "schemekit/criteria.hpp"

#include "schemekit/error.hpp"
#include "schemekit/modular.hpp"
#include "schemekit/structure.hpp"

#include <stdexcept>

namespace schemekit {

bool is_quasi_thin(const Scheme& s)
{
    return s.max_valency() <= 2;
}

bool has_thin_thin_residue(const Scheme& s)
{
    return thin_residue(s).is_subset_of(thin_radical(s));
}

bool is_p_prime_valenced(const Scheme& s, Prime p)
{
    return p_prime_relations(s, p).is_full();
}

bool theorem_a_decide(const Scheme& s, Prime p)
{
    if (!is_quasi_thin(s)) throw NotQuasiThin("quasi-thin criterion needs every valency <= 2");
    if (p.value() > 2) return true;
    return min_singular(s).is_full();
}

bool theorem_b_decide(const Scheme& s, Prime p)
{
    if (!has_thin_thin_residue(s)) throw NotApplicable("thin-residue criterion needs the thin residue to be thin");
    return closure(s, p_prime_relations(s, p)).is_full();
}

std::string_view method_name(Method m) noexcept
{
    switch (m) {
    case Method::oracle: return "oracle";
    case Method::theorem_a: return "theorem-a";
    case Method::theorem_b: return "theorem-b";
    }
    return "?";
}

std::optional<MethodRequest> parse_method_request(std::string_view text) noexcept
{
    if (text == "oracle") return MethodRequest::oracle;
    if (text == "structural") return MethodRequest::structural;
    if (text == "both") return MethodRequest::both;
    return std::nullopt;
}

std::optional<std::pair<Method, bool>> structural_decide(const Scheme& s, Prime p)
{
    const bool a_applies = is_quasi_thin(s);
    const bool b_applies = has_thin_thin_residue(s);
    if (a_applies) {
        const bool verdict = theorem_a_decide(s, p);
        if (b_applies && theorem_b_decide(s, p) != verdict) {
            throw std::logic_error("quasi-thin and thin-residue criteria disagree");
        }
        return std::pair{Method::theorem_a, verdict};
    }
    if (b_applies) return std::pair{Method::theorem_b, theorem_b_decide(s, p)};
    return std::nullopt;
}

Decision decide(const Scheme& s, Prime p, MethodRequest request)
{
    switch (request) {
    case MethodRequest::oracle: {
        const bool verdict = is_p_transitive_oracle(s, p);
        return Decision{p, verdict, Method::oracle, true, verdict, std::nullopt, std::nullopt};
    }
    case MethodRequest::structural: {
        const auto structural = structural_decide(s, p);
        if (!structural) {
            throw MethodNotApplicable("scheme is neither quasi-thin nor has thin thin residue");
        }
        return Decision{p, structural->second, structural->first, true, std::nullopt, structural->second, std::nullopt};
    }
    case MethodRequest::both: {
        const bool oracle = is_p_transitive_oracle(s, p);
        const auto structural = structural_decide(s, p);
        if (!structural) return Decision{p, oracle, Method::oracle, false, oracle, std::nullopt, std::nullopt};
        return Decision{p, oracle, structural->first, true, oracle, structural->second, structural->second == oracle};
    }
    }
    throw std::logic_error("unknown method request");
}

}  // namespace schemekit
