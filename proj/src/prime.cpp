#include "schemekit/prime.hpp"

#include "schemekit/error.hpp"

#include <array>
#include <string>

namespace schemekit {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : small) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t odd = n - 1;
    unsigned twos = 0;
    while ((odd & 1U) == 0) {
        odd >>= 1U;
        ++twos;
    }
    // These bases are a deterministic witness set for all n < 2^64.
    for (auto a : small) {
        std::uint64_t x = powmod(a, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < twos; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value)
{
    if (!is_prime(value)) throw NotPrime(std::to_string(value) + " is not prime");
}

std::uint64_t Prime::reduce(std::int64_t a) const noexcept
{
    const auto m = static_cast<__int128>(value_);
    auto r = static_cast<__int128>(a) % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

}  // namespace schemekit
