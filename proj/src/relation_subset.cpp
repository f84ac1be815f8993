#include "schemekit/relation_subset.hpp"

#include "schemekit/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace schemekit {

namespace {

std::size_t word_count(std::size_t universe)
{
    return std::max<std::size_t>(1, (universe + RelationSubset::word_bits - 1) / RelationSubset::word_bits);
}

}  // namespace

RelationSubset::RelationSubset(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

RelationSubset RelationSubset::full(std::size_t universe)
{
    RelationSubset s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
        const std::size_t lo = w * word_bits;
        const std::size_t bits = std::min(word_bits, universe - std::min(universe, lo));
        s.words_[w] = bits == word_bits ? ~word_type{0} : ((word_type{1} << bits) - 1);
    }
    return s;
}

RelationSubset RelationSubset::of(std::size_t universe, std::initializer_list<std::size_t> indices)
{
    return from_indices(universe, std::span<const std::size_t>(indices.begin(), indices.size()));
}

RelationSubset RelationSubset::from_indices(std::size_t universe, std::span<const std::size_t> indices)
{
    RelationSubset s(universe);
    for (auto i : indices) s.insert(i);
    return s;
}

RelationSubset RelationSubset::from_word(std::size_t universe, word_type bits)
{
    if (universe > word_bits) throw SchemeMismatch("from_word needs a universe of at most 64 relations");
    RelationSubset s(universe);
    s.words_[0] = bits & full(universe).words_[0];
    return s;
}

void RelationSubset::insert(std::size_t i)
{
    if (i >= universe_) {
        throw SchemeMismatch("relation index " + std::to_string(i) + " out of range 0.." +
                             std::to_string(universe_ == 0 ? 0 : universe_ - 1));
    }
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
}

void RelationSubset::erase(std::size_t i)
{
    if (i < universe_) words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
}

std::size_t RelationSubset::size() const noexcept
{
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool RelationSubset::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

void RelationSubset::require_same_universe(const RelationSubset& other) const
{
    if (universe_ != other.universe_) {
        throw SchemeMismatch("subsets over " + std::to_string(universe_) + " and " +
                             std::to_string(other.universe_) + " relations");
    }
}

bool RelationSubset::is_subset_of(const RelationSubset& other) const
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

RelationSubset& RelationSubset::operator|=(const RelationSubset& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

RelationSubset& RelationSubset::operator&=(const RelationSubset& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

RelationSubset& RelationSubset::operator-=(const RelationSubset& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

RelationSubset RelationSubset::complement() const
{
    return full(universe_) - *this;
}

std::vector<std::size_t> RelationSubset::indices() const
{
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::string RelationSubset::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::strong_ordering operator<=>(const RelationSubset& a, const RelationSubset& b) noexcept
{
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t w = a.words_.size(); w-- > 0;) {
        if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const RelationSubset& s)
{
    os << '{';
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) os << ',';
        os << i;
        first = false;
    });
    return os << '}';
}

}  // namespace schemekit
