#include "schemekit/structure.hpp"

#include "schemekit/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace schemekit {

namespace {

void require_universe(const Scheme& s, const RelationSubset& t)
{
    if (t.universe() != s.rank()) {
        throw SchemeMismatch("subset over " + std::to_string(t.universe()) + " relations used with a scheme of " +
                             std::to_string(s.rank()) + " relations");
    }
}

void require_index(const Scheme& s, std::size_t i)
{
    if (i >= s.rank()) throw SchemeMismatch("relation index " + std::to_string(i) + " out of range");
}

// Products without the emptiness check, for internal fixpoints.
RelationSubset product_unchecked(const Scheme& s, const RelationSubset& u, const RelationSubset& v)
{
    RelationSubset out(s.rank());
    u.for_each([&](std::size_t a) { v.for_each([&](std::size_t b) { out |= s.product_support(a, b); }); });
    return out;
}

// Union of R_y* R_y over all y.
RelationSubset star_products(const Scheme& s)
{
    RelationSubset q(s.rank());
    for (std::size_t y = 0; y < s.rank(); ++y) q |= s.product_support(s.star(y), y);
    return q;
}

bool by_size_then_bits(const RelationSubset& a, const RelationSubset& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

RelationSubset complex_product(const Scheme& s, const RelationSubset& u, const RelationSubset& v)
{
    require_universe(s, u);
    require_universe(s, v);
    if (u.empty() || v.empty()) throw EmptyOperand("complex product of an empty subset");
    return product_unchecked(s, u, v);
}

RelationSubset complex_product(const Scheme& s, std::span<const RelationSubset> factors)
{
    if (factors.empty()) throw EmptyOperand("complex product of no factors");
    RelationSubset acc = factors.front();
    require_universe(s, acc);
    if (acc.empty()) throw EmptyOperand("complex product of an empty subset");
    for (std::size_t f = 1; f < factors.size(); ++f) acc = complex_product(s, acc, factors[f]);
    return acc;
}

RelationSubset star(const Scheme& s, const RelationSubset& t)
{
    require_universe(s, t);
    RelationSubset out(s.rank());
    t.for_each([&](std::size_t i) { out.insert(s.star(i)); });
    return out;
}

RelationSubset closure(const Scheme& s, const RelationSubset& h)
{
    require_universe(s, h);
    if (h.empty()) throw EmptyOperand("closure of the empty subset");
    RelationSubset t = h | star(s, h);
    t.insert(0);
    for (;;) {
        RelationSubset next = t | product_unchecked(s, t, t);
        if (next == t) return t;
        t = std::move(next);
    }
}

bool is_closed(const Scheme& s, const RelationSubset& t)
{
    require_universe(s, t);
    if (t.empty()) throw EmptyOperand("closedness of the empty subset");
    return product_unchecked(s, star(s, t), t).is_subset_of(t);
}

bool is_strongly_normal(const Scheme& s, const RelationSubset& t)
{
    if (!is_closed(s, t)) throw NotClosed(t.to_string() + " is not closed");
    for (std::size_t i = 0; i < s.rank(); ++i) {
        const auto conj = product_unchecked(s, product_unchecked(s, s.singleton(s.star(i)), t), s.singleton(i));
        if (!conj.is_subset_of(t)) return false;
    }
    return true;
}

RelationSubset thin_radical(const Scheme& s)
{
    RelationSubset out(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (s.valency(i) == 1) out.insert(i);
    }
    return out;
}

RelationSubset thin_residue(const Scheme& s)
{
    return closure(s, star_products(s));
}

RelationSubset min_singular(const Scheme& s)
{
    return product_unchecked(s, thin_residue(s), thin_radical(s));
}

namespace {

// T is singular iff O(S) is in T and (O(S) Q) T is in T, Q = union of R_y* R_y:
// complex multiplication distributes over unions in each factor.
struct SingularTest {
    RelationSubset radical;
    RelationSubset left;

    explicit SingularTest(const Scheme& s)
        : radical(thin_radical(s)), left(product_unchecked(s, radical, star_products(s)))
    {
    }

    bool operator()(const Scheme& s, const RelationSubset& t) const
    {
        return radical.is_subset_of(t) && product_unchecked(s, left, t).is_subset_of(t);
    }
};

}  // namespace

bool is_singular(const Scheme& s, const RelationSubset& t)
{
    require_universe(s, t);
    return SingularTest(s)(s, t);
}

std::vector<RelationSubset> enumerate_singular(const Scheme& s, std::size_t max_free_bits)
{
    const RelationSubset base = min_singular(s);
    const auto free = base.complement().indices();
    if (free.size() > max_free_bits || free.size() >= 64) {
        throw TooLarge(std::to_string(free.size()) + " relations outside the smallest singular subset exceed the cap of " +
                       std::to_string(max_free_bits));
    }
    const SingularTest singular(s);
    std::vector<RelationSubset> out;
    const std::uint64_t count = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        RelationSubset t = base;
        for (std::size_t b = 0; b < free.size(); ++b) {
            if ((mask >> b) & 1U) t.insert(free[b]);
        }
        if (singular(s, t)) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), by_size_then_bits);
    return out;
}

std::vector<RelationSubset> enumerate_closed(const Scheme& s, std::size_t max_class)
{
    if (s.d() > max_class) {
        throw TooLarge("closed-subset enumeration is capped at class " + std::to_string(max_class));
    }
    std::set<RelationSubset> seen;
    std::deque<RelationSubset> queue;
    const RelationSubset trivial = s.singleton(0);
    seen.insert(trivial);
    queue.push_back(trivial);
    while (!queue.empty()) {
        const RelationSubset t = std::move(queue.front());
        queue.pop_front();
        t.complement().for_each([&](std::size_t i) {
            RelationSubset grown = t;
            grown.insert(i);
            auto c = closure(s, grown);
            if (seen.insert(c).second) queue.push_back(std::move(c));
        });
    }
    std::vector<RelationSubset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), by_size_then_bits);
    return out;
}

RelationSubset p_prime_relations(const Scheme& s, Prime p)
{
    RelationSubset out(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (static_cast<std::uint64_t>(s.valency(i)) % p.value() != 0) out.insert(i);
    }
    return out;
}

const char* shape_name(QuasiThinShape shape) noexcept
{
    switch (shape) {
    case QuasiThinShape::two_thin: return "2A_u+2A_v";
    case QuasiThinShape::double_two: return "2A_u";
    case QuasiThinShape::thin_plus_two: return "2A_u+A_v";
    case QuasiThinShape::two_plus_two: return "A_u+A_v";
    case QuasiThinShape::single_four: return "A_u";
    }
    return "?";
}

QuasiThinCase classify_valency_two_product(const Scheme& s, std::size_t a, std::size_t b)
{
    require_index(s, a);
    require_index(s, b);
    if (s.valency(a) != 2 || s.valency(b) != 2) {
        throw ValencyNotTwo("relations " + std::to_string(a) + " and " + std::to_string(b) +
                            " must both have valency 2");
    }
    struct Term {
        std::size_t index;
        std::int64_t coeff;
        std::int64_t valency;
    };
    std::vector<Term> terms;
    for (std::size_t k = 0; k < s.rank(); ++k) {
        if (s.p(a, b, k) > 0) terms.push_back({k, s.p(a, b, k), s.valency(k)});
    }

    std::vector<QuasiThinCase> matches;
    if (terms.size() == 1) {
        const auto& t = terms[0];
        if (t.coeff == 2 && t.valency == 2) matches.push_back({QuasiThinShape::double_two, t.index, std::nullopt});
        if (t.coeff == 1 && t.valency == 4) matches.push_back({QuasiThinShape::single_four, t.index, std::nullopt});
    } else if (terms.size() == 2) {
        const auto& x = terms[0];
        const auto& y = terms[1];
        if (x.coeff == 2 && y.coeff == 2 && x.valency == 1 && y.valency == 1) {
            matches.push_back({QuasiThinShape::two_thin, x.index, y.index});
        }
        for (const auto* pr : {&x, &y}) {
            const auto& thin = *pr;
            const auto& other = pr == &x ? y : x;
            if (thin.coeff == 2 && thin.valency == 1 && other.coeff == 1 && other.valency == 2) {
                matches.push_back({QuasiThinShape::thin_plus_two, thin.index, other.index});
            }
        }
        if (x.coeff == 1 && y.coeff == 1 && x.valency == 2 && y.valency == 2) {
            matches.push_back({QuasiThinShape::two_plus_two, x.index, y.index});
        }
    }
    if (matches.size() != 1) {
        throw NoCaseMatches("A_" + std::to_string(a) + " A_" + std::to_string(b) +
                            " fits none of the valency-2 product shapes");
    }
    return matches.front();
}

QuasiThinCase classify_quasi_thin_product(const Scheme& s, std::size_t a, std::size_t b)
{
    if (s.max_valency() > 2) throw NotQuasiThin("scheme has a relation of valency above 2");
    return classify_valency_two_product(s, a, b);
}

}  // namespace schemekit
