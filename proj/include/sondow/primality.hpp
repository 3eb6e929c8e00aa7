#pragma once

#include "sondow/bigint.hpp"

#include <cstdint>

namespace sondow {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
/// gcd(0, 0) = 0; the result is always non-negative.
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// base^exp mod m by square-and-multiply. Throws InvalidModulus for m = 0.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Signed-base variant; the result is the residue in [0, m).
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m);

/// Deterministic for every 64-bit input (Miller-Rabin with the first twelve
/// prime bases, which is exact below 3.3e24).
bool is_prime(std::uint64_t n) noexcept;

/// Exact below 2^64. Above, a Baillie-PSW test (strong base-2 Miller-Rabin
/// plus strong Lucas) with an extra random Miller-Rabin round: no BPSW
/// pseudoprime is known, but none has been proven impossible either.
bool is_prime(const BigInt& n);

}  // namespace sondow
