#pragma once

#include <compare>
#include <cstdint>

namespace schemekit {

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

/// A prime characteristic. Construction rejects non-primes with NotPrime, so
/// every operation taking a Prime can assume the check already happened.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }

    /// a mod p for a signed integer, in [0, p).
    std::uint64_t reduce(std::int64_t a) const noexcept;

    friend auto operator<=>(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

}  // namespace schemekit
