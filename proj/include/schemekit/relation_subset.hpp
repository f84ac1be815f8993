/**
 * @file relation_subset.hpp
 * @brief Bitset over relation indices 0..d.
 *
 * A subset is tied to a universe of d+1 relations; binary operations between
 * subsets of different universes throw SchemeMismatch. Schemes with d <= 63
 * use a single inline word, larger ones spill into extra words.
 */
#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace schemekit {

class RelationSubset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    explicit RelationSubset(std::size_t universe = 0);

    static RelationSubset full(std::size_t universe);
    static RelationSubset of(std::size_t universe, std::initializer_list<std::size_t> indices);
    static RelationSubset from_indices(std::size_t universe, std::span<const std::size_t> indices);
    /// Bits of a single word; universe must be <= 64.
    static RelationSubset from_word(std::size_t universe, word_type bits);

    std::size_t universe() const noexcept { return universe_; }
    std::span<const word_type> words() const noexcept { return {words_.data(), words_.size()}; }

    bool contains(std::size_t i) const noexcept
    {
        return i < universe_ && ((words_[i / word_bits] >> (i % word_bits)) & 1U) != 0;
    }
    void insert(std::size_t i);
    void erase(std::size_t i);

    std::size_t size() const noexcept;
    bool empty() const noexcept;
    bool is_full() const noexcept { return size() == universe_; }
    bool is_subset_of(const RelationSubset& other) const;

    RelationSubset& operator|=(const RelationSubset& other);
    RelationSubset& operator&=(const RelationSubset& other);
    /// Set difference.
    RelationSubset& operator-=(const RelationSubset& other);
    friend RelationSubset operator|(RelationSubset a, const RelationSubset& b) { return a |= b; }
    friend RelationSubset operator&(RelationSubset a, const RelationSubset& b) { return a &= b; }
    friend RelationSubset operator-(RelationSubset a, const RelationSubset& b) { return a -= b; }
    /// Complement within the universe.
    RelationSubset complement() const;

    std::vector<std::size_t> indices() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type bits = words_[w];
            while (bits != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * word_bits + b);
                bits &= bits - 1;
            }
        }
    }

    /// "{0,1,3}"
    std::string to_string() const;

    friend bool operator==(const RelationSubset& a, const RelationSubset& b) noexcept
    {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    /// Orders by universe, then by the subset read as a binary number.
    friend std::strong_ordering operator<=>(const RelationSubset& a, const RelationSubset& b) noexcept;

private:
    void require_same_universe(const RelationSubset& other) const;

    std::size_t universe_;
    boost::container::small_vector<word_type, 1> words_;
};

std::ostream& operator<<(std::ostream& os, const RelationSubset& s);

}  // namespace schemekit
