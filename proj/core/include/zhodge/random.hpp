#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zhodge/hodge.hpp"
#include "zhodge/ring.hpp"

namespace zhodge {

/// Seeded generator with platform-independent draws: mt19937_64's output
/// sequence is fixed by the standard, and bounded draws are done here rather
/// than through std::uniform_int_distribution, whose algorithm is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent seed for case `index` of a run seeded with `seed` (splitmix64).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

struct ProfileParams {
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  unsigned max_exponent = 4;
  unsigned max_degree = 8;  ///< caps 2 * dim
  unsigned max_hodge = 5;
  unsigned max_summands = 3;
};

/// Torsion group with 1..max_summands cyclic summands.
FinAbGroup random_torsion_group(Rng& rng, const ProfileParams& params);

/// A valid (not necessarily realizable) profile with dim <= max_degree / 2.
CohomologyProfile random_profile(Rng& rng, const ProfileParams& params, std::string name);

/// Same, with the dimension fixed.
CohomologyProfile random_profile_of_dim(Rng& rng, const ProfileParams& params, unsigned dim,
                                        std::string name);

struct ElementParams {
  std::vector<std::uint64_t> primes{2, 3, 5};
  unsigned max_r = 2;
  unsigned max_exp = 3;
  unsigned max_terms = 4;
  long max_coeff = 9;
};

BasisMonomial random_basis_monomial(Rng& rng, const ElementParams& params);
/// Up to max_terms basis monomials with coefficients in [-max_coeff, max_coeff].
RingElement random_element(Rng& rng, const ElementParams& params);
/// A product of up to three s's, three r's and arbitrary u, v, t, x powers.
RawMonomial random_raw_monomial(Rng& rng, const ElementParams& params);

}  // namespace zhodge
