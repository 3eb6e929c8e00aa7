#pragma once

#include "sondow/rational.hpp"

#include <cstdint>

namespace sondow {

inline constexpr std::uint32_t kDefaultBernoulliCap = 500;

/// Exact Bernoulli number B_k from Σ_{j=0}^{m} C(m+1, j) B_j = 0, which
/// fixes B_1 = -1/2. Odd k > 1 gives 0. Values are memoised process-wide.
/// Throws OutOfRange when k > cap.
ExactRational bernoulli_number(std::uint32_t k, std::uint32_t cap = kDefaultBernoulliCap);

}  // namespace sondow
