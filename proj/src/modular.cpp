#include "schemekit/modular.hpp"

#include "schemekit/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schemekit {

// ---- raw residues ----------------------------------------------------------

namespace fp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept
{
    return a >= p - b ? a - (p - b) : a + b;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept
{
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0) throw std::domain_error("zero has no inverse");
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint64_t e = p - 2;
    while (e != 0) {
        if (e & 1U) result = mul(result, base, p);
        base = mul(base, base, p);
        e >>= 1U;
    }
    return result;
}

}  // namespace fp

// ---- FpScalar --------------------------------------------------------------

void FpScalar::require_same_field(const FpScalar& o) const
{
    if (p_ != o.p_) {
        throw ModulusMismatch("GF(" + std::to_string(p_.value()) + ") vs GF(" + std::to_string(o.p_.value()) + ")");
    }
}

FpScalar FpScalar::operator+(const FpScalar& o) const
{
    require_same_field(o);
    return {p_, fp::add(value_, o.value_, p_.value()), 0};
}

FpScalar FpScalar::operator-(const FpScalar& o) const
{
    require_same_field(o);
    return {p_, fp::sub(value_, o.value_, p_.value()), 0};
}

FpScalar FpScalar::operator*(const FpScalar& o) const
{
    require_same_field(o);
    return {p_, fp::mul(value_, o.value_, p_.value()), 0};
}

FpScalar FpScalar::operator-() const
{
    return {p_, fp::sub(0, value_, p_.value()), 0};
}

FpScalar FpScalar::inverse() const
{
    return {p_, fp::inv(value_, p_.value()), 0};
}

// ---- FpVector --------------------------------------------------------------

FpVector::FpVector(Prime p, std::size_t dim) : p_(p), coords_(dim, 0) {}

FpVector::FpVector(Prime p, std::span<const std::int64_t> coords) : p_(p), coords_(coords.size())
{
    std::transform(coords.begin(), coords.end(), coords_.begin(), [&](std::int64_t c) { return p.reduce(c); });
}

void FpVector::set(std::size_t i, const FpScalar& value)
{
    if (value.prime() != p_) throw ModulusMismatch("coordinate from a different field");
    coords_.at(i) = value.value();
}

bool FpVector::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](std::uint64_t c) { return c == 0; });
}

void FpVector::require_same_space(const FpVector& o) const
{
    if (p_ != o.p_) throw ModulusMismatch("vectors over different fields");
    if (coords_.size() != o.coords_.size()) throw SchemeMismatch("vectors of different length");
}

FpVector& FpVector::operator+=(const FpVector& o)
{
    require_same_space(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = fp::add(coords_[i], o.coords_[i], p_.value());
    return *this;
}

FpVector& FpVector::operator-=(const FpVector& o)
{
    require_same_space(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = fp::sub(coords_[i], o.coords_[i], p_.value());
    return *this;
}

FpVector FpVector::scaled(const FpScalar& c) const
{
    if (c.prime() != p_) throw ModulusMismatch("scalar from a different field");
    FpVector out = *this;
    for (auto& x : out.coords_) x = fp::mul(x, c.value(), p_.value());
    return out;
}

// ---- FpMatrix --------------------------------------------------------------

FpMatrix::FpMatrix(Prime p, std::size_t dim) : p_(p), dim_(dim), cells_(dim * dim, 0) {}

FpMatrix FpMatrix::identity(Prime p, std::size_t dim)
{
    FpMatrix m(p, dim);
    for (std::size_t i = 0; i < dim; ++i) m.cells_[i * dim + i] = 1 % p.value();
    return m;
}

FpVector FpMatrix::operator*(const FpVector& v) const
{
    if (v.prime() != p_) throw ModulusMismatch("matrix and vector over different fields");
    if (v.size() != dim_) throw SchemeMismatch("matrix and vector of different dimension");
    const auto q = p_.value();
    FpVector out(p_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < dim_; ++c) acc = fp::add(acc, fp::mul(cells_[r * dim_ + c], v.coords_[c], q), q);
        out.coords_[r] = acc;
    }
    return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const
{
    if (o.p_ != p_) throw ModulusMismatch("matrices over different fields");
    if (o.dim_ != dim_) throw SchemeMismatch("matrices of different dimension");
    const auto q = p_.value();
    FpMatrix out(p_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const auto a = cells_[r * dim_ + k];
            if (a == 0) continue;
            for (std::size_t c = 0; c < dim_; ++c) {
                auto& slot = out.cells_[r * dim_ + c];
                slot = fp::add(slot, fp::mul(a, o.cells_[k * dim_ + c], q), q);
            }
        }
    }
    return out;
}

FpMatrix& FpMatrix::operator+=(const FpMatrix& o)
{
    if (o.p_ != p_) throw ModulusMismatch("matrices over different fields");
    if (o.dim_ != dim_) throw SchemeMismatch("matrices of different dimension");
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] = fp::add(cells_[i], o.cells_[i], p_.value());
    return *this;
}

FpMatrix FpMatrix::scaled(std::uint64_t c) const
{
    FpMatrix out = *this;
    const auto q = p_.value();
    for (auto& x : out.cells_) x = fp::mul(x, c % q, q);
    return out;
}

// ---- linear algebra --------------------------------------------------------

namespace {

// In-place reduced row echelon form of a rows x cols matrix; returns the
// pivot column of each nonzero row, in order.
std::vector<std::size_t> rref(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t q)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        const auto scale = fp::inv(a[r * cols + c], q);
        for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = fp::mul(a[r * cols + k], scale, q);
        for (std::size_t other = 0; other < rows; ++other) {
            if (other == r) continue;
            const auto f = a[other * cols + c];
            if (f == 0) continue;
            for (std::size_t k = c; k < cols; ++k) {
                a[other * cols + k] = fp::sub(a[other * cols + k], fp::mul(f, a[r * cols + k], q), q);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<FpVector> row_reduce(std::vector<FpVector> rows)
{
    if (rows.empty()) return rows;
    const Prime p = rows.front().prime();
    const std::size_t cols = rows.front().size();
    std::vector<std::uint64_t> a;
    a.reserve(rows.size() * cols);
    for (const auto& v : rows) {
        if (v.prime() != p) throw ModulusMismatch("rows over different fields");
        if (v.size() != cols) throw SchemeMismatch("rows of different length");
        a.insert(a.end(), v.coords().begin(), v.coords().end());
    }
    const auto pivots = rref(a, rows.size(), cols, p.value());
    std::vector<FpVector> out;
    out.reserve(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        FpVector v(p, cols);
        for (std::size_t c = 0; c < cols; ++c) v.set(c, FpScalar(p, static_cast<std::int64_t>(a[r * cols + c])));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<FpVector> nullspace(Prime p, std::size_t rows, std::size_t cols, std::vector<std::uint64_t> system)
{
    if (system.size() != rows * cols) throw SchemeMismatch("system size does not match rows x cols");
    const auto q = p.value();
    for (auto& x : system) x %= q;
    const auto pivots = rref(system, rows, cols, q);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<FpVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        FpVector v(p, cols);
        v.set(f, FpScalar(p, 1));
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const auto coeff = system[r * cols + f];
            v.set(pivots[r], FpScalar(p, static_cast<std::int64_t>(fp::sub(0, coeff, q))));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---- the adjacency algebra -------------------------------------------------

namespace {

void require_dim(const Scheme& s, const FpVector& v)
{
    if (v.size() != s.rank()) {
        throw SchemeMismatch("vector of length " + std::to_string(v.size()) + " for a scheme of " +
                             std::to_string(s.rank()) + " relations");
    }
}

}  // namespace

FpMatrix regular_rep_matrix(const Scheme& s, std::size_t i, Prime p)
{
    if (i >= s.rank()) throw SchemeMismatch("relation index " + std::to_string(i) + " out of range");
    FpMatrix m(p, s.rank());
    for (std::size_t j = 0; j < s.rank(); ++j) {
        for (std::size_t k = 0; k < s.rank(); ++k) m.set(k, j, p.reduce(s.p(i, j, k)));
    }
    return m;
}

FpVector act(const Scheme& s, std::size_t i, const FpVector& v)
{
    if (i >= s.rank()) throw SchemeMismatch("relation index " + std::to_string(i) + " out of range");
    require_dim(s, v);
    const Prime p = v.prime();
    const auto q = p.value();
    FpVector out(p, s.rank());
    for (std::size_t k = 0; k < s.rank(); ++k) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < s.rank(); ++j) {
            if (v[j] == 0) continue;
            acc = fp::add(acc, fp::mul(p.reduce(s.p(i, j, k)), v[j], q), q);
        }
        out.set(k, FpScalar(p, static_cast<std::int64_t>(acc)));
    }
    return out;
}

FpVector all_ones(const Scheme& s, Prime p)
{
    return indicator_vector(s, s.full_subset(), p);
}

FpVector indicator_vector(const Scheme& s, const RelationSubset& t, Prime p)
{
    if (t.universe() != s.rank()) throw SchemeMismatch("subset from a different scheme");
    if (t.empty()) throw EmptyOperand("indicator vector of the empty subset");
    FpVector v(p, s.rank());
    t.for_each([&](std::size_t i) { v.set(i, FpScalar(p, 1)); });
    return v;
}

RelationSubset support(const FpVector& v)
{
    RelationSubset out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) out.insert(i);
    }
    return out;
}

bool is_fixed_vector(const Scheme& s, const FpVector& v)
{
    require_dim(s, v);
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (act(s, i, v) != v.scaled(FpScalar(v.prime(), s.valency(i)))) return false;
    }
    return true;
}

bool FixedSpace::contains(const FpVector& v) const
{
    if (v.prime() != prime) throw ModulusMismatch("vector over a different field");
    FpVector rest = v;
    for (const auto& b : basis) {
        const auto lead = static_cast<std::size_t>(
            std::find_if(b.coords().begin(), b.coords().end(), [](std::uint64_t c) { return c != 0; }) -
            b.coords().begin());
        if (rest[lead] != 0) rest -= b.scaled(rest.at(lead));
    }
    return rest.is_zero();
}

FixedSpace fixed_space(const Scheme& s, Prime p)
{
    const std::size_t r = s.rank();
    // Row (i, k), column j: p_ij^k - k_i [k == j].
    std::vector<std::uint64_t> system(r * r * r, 0);
    const auto q = p.value();
    for (std::size_t i = 0; i < r; ++i) {
        const auto ki = p.reduce(s.valency(i));
        for (std::size_t k = 0; k < r; ++k) {
            auto* row = &system[(i * r + k) * r];
            for (std::size_t j = 0; j < r; ++j) row[j] = p.reduce(s.p(i, j, k));
            row[k] = fp::sub(row[k], ki, q);
        }
    }
    return FixedSpace{p, row_reduce(nullspace(p, r * r, r, std::move(system)))};
}

bool is_p_transitive_oracle(const Scheme& s, Prime p)
{
    return fixed_space(s, p).dim() == 1;
}

}  // namespace schemekit
