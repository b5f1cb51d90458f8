#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zhodge/prime.hpp"

namespace zhodge {

/// A finitely generated abelian group Z^r + (sum of Z/p^k), held in canonical
/// form: for every prime the exponents are sorted descending and every
/// sequence is nonempty. Two groups are isomorphic iff they compare equal.
class FinAbGroup {
 public:
  using Exponents = std::vector<unsigned>;
  using TorsionMap = std::map<Prime, Exponents>;

  /// The trivial group.
  FinAbGroup() = default;

  /// Canonicalizes `torsion`. Throws InputError on a zero exponent.
  FinAbGroup(std::uint64_t free_rank, TorsionMap torsion);

  static FinAbGroup free(std::uint64_t rank) { return FinAbGroup(rank, {}); }
  /// Z/p^k, or Z/p^k repeated `multiplicity` times.
  static FinAbGroup cyclic(const Prime& p, unsigned k, std::uint64_t multiplicity = 1);

  std::uint64_t free_rank() const noexcept { return free_rank_; }
  const TorsionMap& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_torsion() const noexcept { return free_rank_ == 0; }
  FinAbGroup torsion_part() const { return FinAbGroup(0, torsion_); }
  FinAbGroup free_part() const { return free(free_rank_); }

  /// "Z^r + Z/p^k + ..." with primes ascending and exponents descending;
  /// "0" for the trivial group.
  std::string str() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::uint64_t free_rank_ = 0;
  TorsionMap torsion_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// a + a + ... + a (`copies` times).
FinAbGroup direct_power(const FinAbGroup& a, std::uint64_t copies);

/// (Z^a + T_A) (x) (Z^b + T_B) = Z^ab + T_A^b + T_B^a + (T_A (x) T_B); cyclic
/// p-parts tensor to Z/p^min(k,k') and distinct primes annihilate.
FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b);

/// Tor_1^Z(A, B), which equals T_A (x) T_B.
FinAbGroup tor(const FinAbGroup& a, const FinAbGroup& b);

/// a_{p,j}(A) = rank over Z/p of p^j A_tors / p^{j+1} A_tors, i.e. the number
/// of p-power exponents strictly greater than j. The free part is ignored.
std::uint64_t a_invariant(const FinAbGroup& a, const Prime& p, unsigned j);

/// Invariant tables keyed by (prime, j).
using InvariantTable = std::map<std::pair<Prime, unsigned>, std::int64_t>;

/// All nonzero a_{p,j}(A).
InvariantTable invariant_table(const FinAbGroup& a);

/// Rebuilds the torsion group whose invariants are `table`: Z/p^j appears
/// a_{p,j-1} - a_{p,j} times. Throws DomainError if any entry is negative or
/// a prime's values increase in j (missing entries count as zero).
FinAbGroup from_invariants(const InvariantTable& table);

}  // namespace zhodge
