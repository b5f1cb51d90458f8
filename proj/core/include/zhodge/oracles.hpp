#pragma once

// Brute-force reference computations. Each one reaches its answer by a route
// that shares no code with the production path it is used to check.

#include <cstdint>
#include <vector>

#include "zhodge/abgroup.hpp"
#include "zhodge/random.hpp"
#include "zhodge/ring.hpp"

namespace zhodge::oracle {

/// Tensor product by expanding both groups into cyclic summands Z and Z/n,
/// tensoring pairwise (Z/n (x) Z/m = Z/gcd(n, m)) and re-factoring each
/// order by trial division.
FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b);

/// a_{p,j}(A) from subgroup orders: log_p(|p^j A_tors| / |p^{j+1} A_tors|),
/// where |p^j Z/n| = n / gcd(n, p^j).
std::uint64_t a_invariant(const FinAbGroup& a, const Prime& p, unsigned j);

/// Reduces a raw monomial by applying the defining relations of R one at a
/// time, choosing the term and the rule at random at every step:
///   s_p s_p -> s_p, s_p s_q -> 0 (p != q), r_j r_j -> r_j, r_j r_k -> 0,
///   u x -> t x, v x -> t x, t x^2 -> t x - x.
/// `corrupt` swaps the last rule for t x^2 -> t x + x.
RingElement randomized_rewrite(const RawMonomial& m, Rng& rng, bool corrupt = false);

/// Coefficients of the Gaussian binomial [n choose k]_q, i.e. the number of
/// Schubert cells of each dimension in Gr(k, n).
std::vector<std::uint64_t> gaussian_binomial(unsigned n, unsigned k);

}  // namespace zhodge::oracle
