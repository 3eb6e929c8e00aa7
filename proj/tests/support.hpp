#pragma once

#include "oracles.hpp"
#include "sondow/factorization.hpp"

#include <string>
#include <vector>

namespace testing {

inline sondow::Factorization F(std::uint64_t n) { return sondow::factorize(n); }

inline sondow::BigInt big(const char* decimal) { return sondow::parse_bigint(decimal); }

/// Factorization assembled from a list of distinct primes (test fixtures).
inline sondow::Factorization from_primes(const std::vector<const char*>& primes) {
  std::vector<sondow::PrimePower> f;
  for (const char* p : primes) f.push_back({big(p), 1});
  return sondow::Factorization::from_primes(std::move(f));
}

inline std::vector<std::pair<std::uint64_t, unsigned>> as_pairs(const sondow::Factorization& f) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (const auto& [p, e] : f.factors()) out.emplace_back(*sondow::to_u64(p), e);
  return out;
}

inline std::string data_path(const std::string& name) {
  return std::string(SONDOW_TEST_DATA_DIR) + "/" + name;
}

}  // namespace testing
