#include "schemekit/core.hpp"

#include "schemekit/error.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace schemekit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("intersection number arithmetic overflowed");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("intersection number arithmetic overflowed");
    return r;
}

[[noreturn]] void violated(Identity id, std::size_t a, std::size_t b, std::size_t c, std::int64_t lhs,
                           std::int64_t rhs, const std::string& detail = {})
{
    throw AxiomViolation(id, {a, b, c}, lhs, rhs, detail);
}

}  // namespace

// ---- IntersectionTensor ----------------------------------------------------

IntersectionTensor::IntersectionTensor(std::size_t d, std::int64_t order, std::vector<std::int64_t> entries)
    : d_(d), order_(order), entries_(std::move(entries))
{
    const std::size_t r = d + 1;
    std::size_t cube = 0;
    if (r == 0 || __builtin_mul_overflow(r, r, &cube) || __builtin_mul_overflow(cube, r, &cube)) {
        violated(Identity::shape, d, 0, 0, 0, 0, "class count too large");
    }
    if (entries_.size() != cube) {
        violated(Identity::shape, d, 0, 0, static_cast<std::int64_t>(entries_.size()),
                 static_cast<std::int64_t>(cube), "entry count must be (d+1)^3");
    }
    if (order_ < 1) violated(Identity::shape, 0, 0, 0, order_, 1, "order must be positive");
    for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
        if (entries_[idx] < 0) {
            violated(Identity::shape, idx / (r * r), (idx / r) % r, idx % r, entries_[idx], 0,
                     "negative intersection number");
        }
    }
}

// ---- RelationMatrix --------------------------------------------------------

RelationMatrix::RelationMatrix(std::size_t n, std::vector<std::uint32_t> cells)
    : n_(n), d_(0), cells_(std::move(cells))
{
    if (n_ == 0) throw MalformedMatrix("matrix must have at least one point", 0, 0);
    if (cells_.size() != n_ * n_) throw MalformedMatrix("expected n*n cells", 0, 0);
    for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) {
            const auto c = cells_[x * n_ + y];
            if (x == y && c != 0) throw MalformedMatrix("diagonal cell is not relation 0", x, y);
            if (x != y && c == 0) throw MalformedMatrix("relation 0 off the diagonal", x, y);
            d_ = std::max<std::size_t>(d_, c);
        }
    }
    if (d_ >= n_ * n_) throw MalformedMatrix("relation index exceeds the number of cells", 0, 0);
    std::vector<bool> seen(d_ + 1, false);
    for (auto c : cells_) seen[c] = true;
    const auto missing = std::find(seen.begin(), seen.end(), false);
    if (missing != seen.end()) {
        throw MalformedMatrix("relation " + std::to_string(missing - seen.begin()) + " never occurs", 0, 0);
    }
}

// ---- counting --------------------------------------------------------------

IntersectionTensor tensor_from_relation_matrix(const RelationMatrix& m, CountCheck check)
{
    const std::size_t n = m.n();
    const std::size_t r = m.d() + 1;

    // Each relation's transpose must again be a single relation.
    std::vector<std::int64_t> transpose(r, -1);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const auto i = m(x, y);
            const auto t = static_cast<std::int64_t>(m(y, x));
            if (transpose[i] < 0) {
                transpose[i] = t;
            } else if (transpose[i] != t) {
                throw NotAScheme("transpose of relation " + std::to_string(i) + " is not a relation");
            }
        }
    }

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> members(r);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) members[m(x, y)].emplace_back(x, y);
    }

    std::vector<std::int64_t> p(r * r * r, 0);
    std::vector<std::int64_t> counts(r * r);
    for (std::size_t k = 0; k < r; ++k) {
        const auto& pairs = members[k];
        std::vector<std::size_t> picks;
        if (check == CountCheck::strict) {
            picks.resize(pairs.size());
            for (std::size_t q = 0; q < pairs.size(); ++q) picks[q] = q;
        } else {
            picks = {0, pairs.size() / 2, pairs.size() - 1};
            std::sort(picks.begin(), picks.end());
            picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
        }
        bool first = true;
        for (auto q : picks) {
            const auto [x, y] = pairs[q];
            std::fill(counts.begin(), counts.end(), 0);
            const auto row_x = m.row(x);
            for (std::size_t z = 0; z < n; ++z) ++counts[row_x[z] * r + m(z, y)];
            for (std::size_t ij = 0; ij < r * r; ++ij) {
                auto& slot = p[ij * r + k];
                if (first) {
                    slot = counts[ij];
                } else if (slot != counts[ij]) {
                    std::ostringstream os;
                    os << "p_" << ij / r << ',' << ij % r << '^' << k << " is " << slot << " at (" << pairs[picks[0]].first
                       << ',' << pairs[picks[0]].second << ") but " << counts[ij] << " at (" << x << ',' << y << ')';
                    throw NotAScheme(os.str());
                }
            }
            first = false;
        }
    }
    return IntersectionTensor(m.d(), static_cast<std::int64_t>(n), std::move(p));
}

// ---- validation ------------------------------------------------------------

Scheme validate_tensor(IntersectionTensor t, ValidateOptions options)
{
    const std::size_t d = t.d();
    const std::size_t r = t.rank();
    if (d > single_word_class_cap && !options.allow_wide_class) {
        violated(Identity::class_too_large, d, 0, 0, static_cast<std::int64_t>(d),
                 static_cast<std::int64_t>(single_word_class_cap), "enable allow_wide_class for larger classes");
    }

    for (std::size_t x = 0; x < r; ++x) {
        for (std::size_t y = 0; y < r; ++y) {
            const std::int64_t delta = x == y ? 1 : 0;
            if (t(0, x, y) != delta) violated(Identity::identity_relation, 0, x, y, t(0, x, y), delta);
            if (t(x, 0, y) != delta) violated(Identity::identity_relation, x, 0, y, t(x, 0, y), delta);
        }
    }

    std::vector<std::size_t> involution(r);
    std::vector<std::int64_t> valency(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t found = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (t(i, j, 0) > 0) {
                involution[i] = j;
                ++found;
            }
        }
        if (found != 1) {
            violated(Identity::involution, i, 0, 0, static_cast<std::int64_t>(found), 1,
                     "need exactly one j with p_ij^0 > 0");
        }
        valency[i] = t(i, involution[i], 0);
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (involution[involution[i]] != i) {
            violated(Identity::involution, i, involution[i], 0, static_cast<std::int64_t>(involution[involution[i]]),
                     static_cast<std::int64_t>(i), "i** must equal i");
        }
        if (valency[i] != valency[involution[i]]) {
            violated(Identity::valency_symmetry, i, involution[i], 0, valency[i], valency[involution[i]]);
        }
    }

    std::int64_t total = 0;
    for (auto k : valency) total = checked_add(total, k);
    if (total != t.order()) violated(Identity::order_sum, 0, 0, 0, total, t.order(), "sum of valencies vs |X|");

    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            std::int64_t sum = 0;
            for (std::size_t u = 0; u < r; ++u) sum = checked_add(sum, t(i, u, j));
            if (sum != valency[i]) violated(Identity::row_sum, i, j, 0, sum, valency[i], "sum_u p_iu^j = k_i");
        }
    }

    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            std::int64_t sum = 0;
            for (std::size_t u = 0; u < r; ++u) sum = checked_add(sum, checked_mul(t(i, j, u), valency[u]));
            const auto lhs = checked_mul(valency[i], valency[j]);
            if (lhs != sum) violated(Identity::valency_product, i, j, 0, lhs, sum, "k_i k_j = sum_u p_ij^u k_u");
        }
    }

    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t l = 0; l < r; ++l) {
                const auto a = checked_mul(valency[l], t(i, j, l));
                const auto b = checked_mul(valency[i], t(l, involution[j], i));
                const auto c = checked_mul(valency[j], t(involution[i], l, j));
                if (a != b) violated(Identity::triangle, i, j, l, a, b, "k_l p_ij^l = k_i p_lj*^i");
                if (a != c) violated(Identity::triangle, i, j, l, a, c, "k_l p_ij^l = k_j p_i*l^j");
            }
        }
    }

    return Scheme(std::move(t), std::move(valency), std::move(involution));
}

// ---- Scheme ----------------------------------------------------------------

Scheme::Scheme(IntersectionTensor tensor, std::vector<std::int64_t> valency, std::vector<std::size_t> involution)
    : tensor_(std::move(tensor)), valency_(std::move(valency)), involution_(std::move(involution))
{
    const std::size_t r = rank();
    support_.reserve(r * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            RelationSubset s(r);
            for (std::size_t k = 0; k < r; ++k) {
                if (tensor_(i, j, k) > 0) s.insert(k);
            }
            support_.push_back(std::move(s));
        }
    }
}

std::int64_t Scheme::max_valency() const noexcept
{
    return *std::max_element(valency_.begin(), valency_.end());
}

RelationSubset Scheme::singleton(std::size_t i) const
{
    return RelationSubset::of(rank(), {i});
}

}  // namespace schemekit
