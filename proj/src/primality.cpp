#include "sondow/primality.hpp"

#include "sondow/errors.hpp"

#include <array>
#include <utility>

namespace sondow {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidModulus, "mod_pow: modulus must be >= 1");
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m) {
  if (m < 1) throw Error(ErrorKind::InvalidModulus, "mod_pow: modulus must be >= 1");
  if (exp < 0) throw Error(ErrorKind::InvalidExponent, "mod_pow: exponent must be >= 0");
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

bool strong_probable_prime(std::uint64_t n, std::uint64_t d, int r, std::uint64_t a) noexcept {
  std::uint64_t x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kBases) {
    if (!strong_probable_prime(n, d, r, a)) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (auto small = to_u64(n)) return is_prime(*small);
  if (n < 0) return false;
  // GMP >= 6.2 runs Baillie-PSW first, then reps - 24 Miller-Rabin rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

}  // namespace sondow
