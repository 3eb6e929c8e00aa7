#include "sondow/bernoulli.hpp"

#include "sondow/errors.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace sondow {

namespace {

struct BernoulliTable {
  std::mutex mutex;
  std::vector<mpq_class> values{mpq_class(1), mpq_class(-1, 2)};

  void extend_to(std::uint32_t k) {
    for (std::uint32_t m = static_cast<std::uint32_t>(values.size()); m <= k; ++m) {
      if (m % 2 == 1) {
        values.emplace_back(0);
        continue;
      }
      // Σ_{j<m} C(m+1, j) B_j, skipping the vanishing odd terms.
      mpz_class binom = 1;  // C(m+1, 0)
      mpq_class acc = 0;
      for (std::uint32_t j = 0; j < m; ++j) {
        if (j < 2 || j % 2 == 0) acc += mpq_class(binom) * values[j];
        binom = binom * (m + 1 - j) / (j + 1);
      }
      values.push_back(-acc / (m + 1));
      values.back().canonicalize();
    }
  }
};

BernoulliTable& table() {
  static BernoulliTable instance;
  return instance;
}

}  // namespace

ExactRational bernoulli_number(std::uint32_t k, std::uint32_t cap) {
  if (k > cap) {
    throw Error(ErrorKind::OutOfRange,
                "Bernoulli index " + std::to_string(k) + " above cap " + std::to_string(cap));
  }
  auto& t = table();
  std::lock_guard lock(t.mutex);
  t.extend_to(k);
  const mpq_class& v = t.values[k];
  return ExactRational(v.get_num(), v.get_den());
}

}  // namespace sondow
