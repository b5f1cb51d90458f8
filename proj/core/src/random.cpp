#include "zhodge/random.hpp"

#include <algorithm>
#include <limits>

namespace zhodge {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

FinAbGroup random_torsion_group(Rng& rng, const ProfileParams& params) {
  FinAbGroup out;
  const auto n = rng.between(1, params.max_summands);
  for (std::int64_t k = 0; k < n; ++k) {
    const Prime p(rng.pick(params.primes));
    out = direct_sum(out, FinAbGroup::cyclic(p, static_cast<unsigned>(rng.between(1, params.max_exponent))));
  }
  return out;
}

CohomologyProfile random_profile_of_dim(Rng& rng, const ProfileParams& params, unsigned dim,
                                        std::string name) {
  CohomologyProfile::HodgeNumbers hodge;
  for (unsigned p = 0; p <= dim; ++p) {
    for (unsigned q = 0; q <= dim; ++q) {
      if (rng.chance(1, 2)) hodge[{p, q}] = static_cast<std::uint64_t>(rng.between(1, params.max_hodge));
    }
  }
  CohomologyProfile::TorsionGroups torsion;
  for (unsigned i = 2; i <= 2 * dim; ++i) {
    if (rng.chance(1, 3)) torsion[i] = random_torsion_group(rng, params);
  }
  return CohomologyProfile::make(std::move(name), dim, std::move(hodge), std::move(torsion));
}

CohomologyProfile random_profile(Rng& rng, const ProfileParams& params, std::string name) {
  const auto dim = static_cast<unsigned>(rng.between(0, params.max_degree / 2));
  return random_profile_of_dim(rng, params, dim, std::move(name));
}

BasisMonomial random_basis_monomial(Rng& rng, const ElementParams& params) {
  BasisMonomial m;
  if (rng.chance(1, 2)) m.idem.s = Prime(rng.pick(params.primes));
  if (rng.chance(1, 2)) m.idem.r = static_cast<unsigned>(rng.between(0, params.max_r));
  const auto e = [&] { return static_cast<unsigned>(rng.between(0, params.max_exp)); };
  switch (rng.below(3)) {
    case 0: {
      const unsigned u = e();
      const unsigned v = e();
      m.main = MainMonomial::uvt(u, v, e());
      break;
    }
    case 1:
      m.main = MainMonomial::tx(e());
      break;
    default:
      m.main = MainMonomial::xpow(static_cast<unsigned>(rng.between(2, params.max_exp + 1)));
      break;
  }
  return m;
}

RingElement random_element(Rng& rng, const ElementParams& params) {
  RingElement::Terms terms;
  const auto n = rng.between(0, params.max_terms);
  for (std::int64_t k = 0; k < n; ++k) {
    terms[random_basis_monomial(rng, params)] += rng.between(-params.max_coeff, params.max_coeff);
  }
  return RingElement(std::move(terms));
}

RawMonomial random_raw_monomial(Rng& rng, const ElementParams& params) {
  RawMonomial m;
  const auto ns = rng.between(0, 3);
  for (std::int64_t k = 0; k < ns; ++k) m.s.emplace_back(rng.pick(params.primes));
  const auto nr = rng.between(0, 3);
  for (std::int64_t k = 0; k < nr; ++k) m.r.push_back(static_cast<unsigned>(rng.between(0, params.max_r)));
  const auto e = [&] { return static_cast<unsigned>(rng.between(0, params.max_exp + 1)); };
  m.u = e();
  m.v = e();
  m.t = e();
  m.x = e();
  return m;
}

}  // namespace zhodge
