// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "oracles.hpp"

#include "schemekit/core.hpp"
#include "schemekit/criteria.hpp"
#include "schemekit/ingest.hpp"
#include "schemekit/modular.hpp"
#include "schemekit/structure.hpp"

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace schemekit;

namespace {

class Criterion {
public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failures_++ == 0) first_ = what;
    }

    bool report(int number) const
    {
        std::cout << (failures_ == 0 ? "PASS" : "FAIL") << " criterion " << number << ": " << name_ << " (" << checks_
                  << " checks";
        if (failures_) std::cout << ", " << failures_ << " failed; first: " << first_;
        std::cout << ")\n";
        return failures_ == 0;
    }

private:
    std::string name_;
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

const std::vector<std::uint64_t> primes{2, 3, 5, 7};

RelationSubset sub(const Scheme& s, std::initializer_list<std::size_t> idx)
{
    return RelationSubset::of(s.rank(), idx);
}

std::vector<FpVector> span_of(const FixedSpace& space, std::size_t rank)
{
    const auto p = space.prime.value();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < space.dim(); ++i) total *= p;
    std::vector<FpVector> out;
    for (std::uint64_t n = 0; n < total; ++n) {
        FpVector v(space.prime, rank);
        auto code = n;
        for (const auto& b : space.basis) {
            v += b.scaled(FpScalar(space.prime, static_cast<std::int64_t>(code % p)));
            code /= p;
        }
        out.push_back(v);
    }
    return out;
}

bool fixed_by_action(const Scheme& s, const FpVector& v)
{
    for (std::size_t i = 0; i < s.rank(); ++i)
        if (act(s, i, v) != v.scaled(FpScalar(v.prime(), s.valency(i)))) return false;
    return true;
}

bool fixture_reproduction()
{
    Criterion c("fixture reproduction");
    const Prime two(2);

    try {
        const auto s = oracle::fixture("order05-no02");
        c.expect(s.valency(1) == 2 && s.valency(2) == 2, "order05-no02 valencies");
        c.expect(complex_product(s, sub(s, {1}), sub(s, {1})) == sub(s, {0, 2}), "order05-no02 R1^2");
        c.expect(complex_product(s, sub(s, {2}), sub(s, {2})) == sub(s, {0, 1}), "order05-no02 R2^2");
        c.expect(thin_residue(s).is_full(), "order05-no02 residue");
        c.expect(closure(s, p_prime_relations(s, two)) == sub(s, {0}), "order05-no02 closure of S_2'");
        c.expect(thin_radical(s) == sub(s, {0}), "order05-no02 radical");
        c.expect(fixed_space(s, two).dim() == 1, "order05-no02 dim at 2");
    } catch (const std::exception& e) {
        c.expect(false, std::string("order05-no02: ") + e.what());
    }

    try {
        const auto s = oracle::fixture("order06-no06");
        c.expect(thin_residue(s) == sub(s, {0, 1}) && thin_radical(s) == sub(s, {0, 1}), "order06-no06 residue/radical");
        c.expect(s.star(2) == 3, "order06-no06 2* = 3");
        const std::vector<RelationSubset> expected{sub(s, {0, 1}), sub(s, {0, 1, 2}), sub(s, {0, 1, 3}), s.full_subset()};
        c.expect(enumerate_singular(s) == expected, "order06-no06 singular subsets");
        c.expect(!is_closed(s, sub(s, {0, 1, 2})) && !is_closed(s, sub(s, {0, 1, 3})), "order06-no06 not closed");
        c.expect(!is_p_transitive_oracle(s, two), "order06-no06 oracle");
        c.expect(is_quasi_thin(s) && !theorem_a_decide(s, two), "order06-no06 quasi-thin criterion");
        c.expect(closure(s, p_prime_relations(s, two)) == sub(s, {0, 1}), "order06-no06 closure of S_2'");
    } catch (const std::exception& e) {
        c.expect(false, std::string("order06-no06: ") + e.what());
    }

    try {
        const auto s = oracle::fixture("order06-no02");
        c.expect(thin_radical(s) == sub(s, {0, 1}), "order06-no02 radical");
        c.expect(s.valency(2) == 4, "order06-no02 k2");
        c.expect(thin_residue(s).is_full(), "order06-no02 residue");
        const auto space = fixed_space(s, two);
        const std::vector<std::int64_t> a01{1, 1, 0};
        c.expect(space.contains(FpVector(two, a01)) && space.contains(all_ones(s, two)), "order06-no02 fixed vectors");
        c.expect(space.dim() >= 2 && !is_p_transitive_oracle(s, two), "order06-no02 oracle");
        c.expect(!is_quasi_thin(s) && !has_thin_thin_residue(s), "order06-no02 no criterion applies");
        c.expect(min_singular(s).is_full(), "order06-no02 min_singular");
    } catch (const std::exception& e) {
        c.expect(false, std::string("order06-no02: ") + e.what());
    }

    try {
        const auto s = oracle::fixture("order06-no05");
        c.expect(is_quasi_thin(s), "order06-no05 quasi-thin");
        c.expect(thin_radical(s) == sub(s, {0, 1}), "order06-no05 radical");
        c.expect(complex_product(s, sub(s, {s.star(2)}), sub(s, {2})) == sub(s, {0, 2}), "order06-no05 R2*R2");
        c.expect(complex_product(s, sub(s, {1}), sub(s, {2})) == sub(s, {3}), "order06-no05 R1R2");
        c.expect(min_singular(s).is_full(), "order06-no05 min_singular");
        c.expect(theorem_a_decide(s, two) && is_p_transitive_oracle(s, two), "order06-no05 transitive");
    } catch (const std::exception& e) {
        c.expect(false, std::string("order06-no05: ") + e.what());
    }

    try {
        const auto s = oracle::fixture("order06-no04");
        c.expect(has_thin_thin_residue(s), "order06-no04 thin thin residue");
        const std::vector<std::int64_t> k(s.valencies().begin(), s.valencies().end());
        c.expect(k == std::vector<std::int64_t>{1, 1, 1, 3}, "order06-no04 valencies");
        c.expect(closure(s, p_prime_relations(s, two)).is_full(), "order06-no04 closure of S_2'");
        c.expect(theorem_b_decide(s, two) && is_p_transitive_oracle(s, two), "order06-no04 transitive");
    } catch (const std::exception& e) {
        c.expect(false, std::string("order06-no04: ") + e.what());
    }
    return c.report(1);
}

bool cross_validation(const std::vector<std::string>& ids)
{
    Criterion c("structural criteria agree with the oracle over " + std::to_string(ids.size()) +
                " fixtures and primes 2,3,5,7");
    c.expect(ids.size() >= 20, "fewer than 20 fixtures");
    for (const auto& id : ids) {
        try {
            const auto s = oracle::fixture(id);
            for (auto q : primes) {
                const Prime p(q);
                const bool o = is_p_transitive_oracle(s, p);
                const auto tag = id + " p=" + std::to_string(q);
                if (is_quasi_thin(s)) c.expect(theorem_a_decide(s, p) == o, tag + " quasi-thin criterion");
                if (has_thin_thin_residue(s)) c.expect(theorem_b_decide(s, p) == o, tag + " thin-residue criterion");
            }
        } catch (const std::exception& e) {
            c.expect(false, id + ": " + e.what());
        }
    }
    return c.report(2);
}

bool fixed_space_suite(const std::vector<std::string>& ids)
{
    Criterion c("fixed-space properties");
    for (const auto& id : ids) {
        try {
            const auto s = oracle::fixture(id);
            const auto radical = thin_radical(s);
            const auto residue = thin_residue(s);
            const bool tt = residue.is_subset_of(radical);
            for (auto q : primes) {
                const Prime p(q);
                const auto tag = id + " p=" + std::to_string(q);
                const auto space = fixed_space(s, p);
                const auto sp = p_prime_relations(s, p);
                const auto sp_closure = closure(s, sp);

                c.expect(space.dim() >= 1 && space.contains(all_ones(s, p)), tag + " J in fixed space");
                if (s.order() % static_cast<std::int64_t>(q) != 0) c.expect(space.dim() == 1, tag + " p does not divide |X|");
                if (sp.is_full()) c.expect(space.dim() == 1, tag + " p'-valenced");

                for (const auto& v : space.basis) {
                    const auto u = support(v);
                    if (!u.contains(0)) {
                        c.expect((u & sp).empty(), tag + " support without R0");
                    } else {
                        bool equal = true;
                        sp.for_each([&](std::size_t r) { equal = equal && v[r] == v[0]; });
                        c.expect(equal, tag + " coordinates on S_p'");
                    }
                    radical.for_each([&](std::size_t i) {
                        c.expect(complex_product(s, s.singleton(i), u) == u, tag + " thin relation fixes support");
                    });
                }

                if (s.d() <= 10) {
                    bool divisible = true;
                    for (std::size_t i = 0; i < s.rank(); ++i)
                        if (s.valency(i) != 1 && s.valency(i) % static_cast<std::int64_t>(q) != 0) divisible = false;
                    if (divisible) {
                        for (const auto& t : enumerate_singular(s))
                            c.expect(fixed_by_action(s, indicator_vector(s, t, p)), tag + " singular indicator");
                    }
                    if (tt) {
                        for (const auto& t : enumerate_closed(s)) {
                            if (!(residue | sp).is_subset_of(t)) continue;
                            c.expect(is_singular(s, t), tag + " closed superset is singular");
                            c.expect(fixed_by_action(s, indicator_vector(s, t, p)), tag + " closed superset indicator");
                        }
                    }
                }

                if (tt && space.dim() <= 12) {
                    for (const auto& v : span_of(space, s.rank()))
                        if (v[0] != 0) c.expect(sp_closure.is_subset_of(support(v)), tag + " support contains <S_p'>");
                }
            }

            if (is_quasi_thin(s)) {
                const auto space = fixed_space(s, Prime(2));
                if (space.dim() <= 12) {
                    std::set<RelationSubset> supports;
                    for (const auto& v : span_of(space, s.rank()))
                        if (v[0] != 0) supports.insert(support(v));
                    const auto singular = enumerate_singular(s);
                    c.expect(std::set<RelationSubset>(singular.begin(), singular.end()) == supports,
                             id + " supports at p=2 are the singular subsets");
                }
            }
        } catch (const std::exception& e) {
            c.expect(false, id + ": " + e.what());
        }
    }
    return c.report(3);
}

bool identity_suite(const std::vector<std::string>& ids)
{
    Criterion c("intersection-number identities and counting modes");
    for (const auto& id : ids) {
        try {
            const auto m = oracle::fixture_matrix(id);
            const auto spot = tensor_from_relation_matrix(m, CountCheck::spot);
            if (m.n() <= 12) c.expect(spot == tensor_from_relation_matrix(m, CountCheck::strict), id + " strict vs spot");
            const auto s = validate_tensor(spot);
            const auto r = s.rank();
            auto k = [&](std::size_t i) { return s.valency(i); };
            std::int64_t total = 0;
            for (std::size_t i = 0; i < r; ++i) {
                total += k(i);
                c.expect(k(i) == k(s.star(i)), id + " k_i = k_i*");
                for (std::size_t j = 0; j < r; ++j) {
                    c.expect(s.p(i, j, 0) == (j == s.star(i) ? k(i) : 0), id + " p_ij^0");
                    std::int64_t row = 0;
                    std::int64_t weighted = 0;
                    std::size_t support = 0;
                    for (std::size_t u = 0; u < r; ++u) {
                        row += s.p(i, u, j);
                        weighted += s.p(i, j, u) * k(u);
                        support += s.p(i, j, u) > 0;
                        c.expect(k(u) * s.p(i, j, u) == k(i) * s.p(u, s.star(j), i), id + " triangle (first)");
                        c.expect(k(u) * s.p(i, j, u) == k(j) * s.p(s.star(i), u, j), id + " triangle (second)");
                    }
                    c.expect(row == k(i), id + " row sum");
                    c.expect(weighted == k(i) * k(j), id + " valency product");
                    c.expect(support <= static_cast<std::size_t>(std::gcd(k(i), k(j))), id + " gcd bound");
                    if (k(i) == 1) {
                        std::size_t hits = 0;
                        for (std::size_t l = 0; l < r; ++l) {
                            if (s.p(i, j, l) > 0) {
                                ++hits;
                                c.expect(s.p(i, j, l) == 1 && k(l) == k(j), id + " thin product");
                            }
                        }
                        c.expect(hits == 1, id + " thin product is a single relation");
                    }
                }
            }
            c.expect(total == s.order(), id + " valencies sum to |X|");
        } catch (const std::exception& e) {
            c.expect(false, id + ": " + e.what());
        }
    }
    return c.report(4);
}

bool structure_oracles(const std::vector<std::string>& ids)
{
    Criterion c("closure, singular and commutation oracles");
    for (const auto& id : ids) {
        try {
            const auto s = oracle::fixture(id);
            if (s.d() > 10) continue;
            for (oracle::Mask h = 1; h <= oracle::full(s); ++h) {
                const auto got = closure(s, RelationSubset::from_word(s.rank(), h));
                c.expect(got.words()[0] == oracle::closure(s, h), id + " closure of " + std::to_string(h));
            }

            auto meet = s.full_subset();
            for (const auto& t : enumerate_singular(s)) meet &= t;
            c.expect(meet == min_singular(s), id + " min_singular is the meet");

            const auto closed_sets = enumerate_closed(s);
            for (const auto& k : closed_sets) {
                if (!is_strongly_normal(s, k)) continue;
                for (const auto& h : closed_sets)
                    c.expect(complex_product(s, h, k) == complex_product(s, k, h), id + " HK = KH");
            }
        } catch (const std::exception& e) {
            c.expect(false, id + ": " + e.what());
        }
    }
    return c.report(5);
}

bool determinism(const std::string& binary)
{
    Criterion c("batch reports are byte-identical across runs");
    const auto catalog = (oracle::fixture_dir() / "catalog.cat").string();
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = (dir / "schemekit-acceptance-a.json").string();
    const auto b = (dir / "schemekit-acceptance-b.json").string();
    auto command = [&](const std::string& out) {
        return "\"" + binary + "\" batch \"" + catalog + "\" --primes 2,3,5,7 --format structured --out \"" + out + "\"";
    };
    c.expect(std::system(command(a).c_str()) == 0, "first batch run failed");
    c.expect(std::system(command(b).c_str()) == 0, "second batch run failed");
    try {
        const auto first = read_file(a);
        const auto second = read_file(b);
        c.expect(!first.empty() && first == second, "reports differ");
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    return c.report(6);
}

}  // namespace

int main(int argc, char** argv)
{
    const std::string binary = argc > 1 ? argv[1] : SCHEMEKIT_BINARY;
    const auto ids = oracle::fixture_ids();

    bool ok = true;
    ok &= fixture_reproduction();
    ok &= cross_validation(ids);
    ok &= fixed_space_suite(ids);
    ok &= identity_suite(ids);
    ok &= structure_oracles(ids);
    ok &= determinism(binary);
    return ok ? 0 : 1;
}
