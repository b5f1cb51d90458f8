#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zhodge/abgroup.hpp"
#include "zhodge/ring.hpp"

namespace zhodge {

/// Stand-in for a smooth projective variety: its Hodge numbers and the
/// torsion subgroups of its integral cohomology.
struct CohomologyProfile {
  using HodgeNumbers = std::map<std::pair<unsigned, unsigned>, std::uint64_t>;
  using TorsionGroups = std::map<unsigned, FinAbGroup>;

  std::string name;
  unsigned dim = 0;
  HodgeNumbers hodge;     ///< h^{p,q}; zero entries are never stored
  TorsionGroups torsion;  ///< H^i(X, Z)_tors; trivial groups are never stored

  /// Drops zero entries, then validates. Throws InputError on violations.
  static CohomologyProfile make(std::string name, unsigned dim, HodgeNumbers hodge,
                                TorsionGroups torsion = {});

  std::uint64_t hodge_number(unsigned p, unsigned q) const;
  /// Sum of h^{p,q} over p + q = i.
  std::uint64_t betti(unsigned i) const;
  FinAbGroup torsion_at(unsigned i) const;
  /// Z^betti(i) + H^i_tors.
  FinAbGroup cohomology(unsigned i) const;

  /// Same Hodge numbers, torsion and dimension; names may differ.
  bool same_cohomology(const CohomologyProfile& other) const {
    return dim == other.dim && hodge == other.hodge && torsion == other.torsion;
  }
};

/// Structural checks every profile must pass: h^{p,q} supported in
/// [0, dim]^2, torsion groups finite and supported in degrees 2..2*dim
/// (H^0 and H^1 are torsion-free). Throws InputError.
void validate(const CohomologyProfile& x);

/// Realizability warnings (Hodge symmetry, Serre duality, torsion duality
/// H^i_tors = H^{2n+1-i}_tors). Synthetic profiles may legitimately fail these.
std::vector<std::string> realizability_lints(const CohomologyProfile& x);

/// One-line summary, e.g. "E (dim 2): h0,0=1 h1,1=10 h2,2=1; H2=Z/2 H3=Z/2".
std::string describe(const CohomologyProfile& x);

CohomologyProfile point_profile();
CohomologyProfile projective_space_profile(unsigned n);

/// a_{p,i,j}(X) = a_{p,j}(H^i(X, Z)_tors).
std::uint64_t a_pij(const CohomologyProfile& x, const Prime& p, unsigned i, unsigned j);

/// Sum over (p, i, j) of (-1)^i a_{p,i,j}(X) s_p r_j t^i x.
RingElement torsion_poincare(const CohomologyProfile& x);

/// torsion_poincare(X) + sum of (-1)^{p+q} h^{p,q}(X) u^p v^q.
RingElement integral_hodge(const CohomologyProfile& x);

/// The data read back from an element of R+: signed coefficients already
/// corrected, so every value is nonnegative.
struct RPlusData {
  std::map<std::pair<unsigned, unsigned>, BigInt> hodge;
  /// degree i -> invariant table a_{p,i,j}
  std::map<unsigned, InvariantTable> invariants;
};

/// Reads off h^{p,q} and a_{p,i,j}, or nullopt if the element is not in R+.
std::optional<RPlusData> extract_r_plus(const RingElement& alpha);

bool is_in_r_plus(const RingElement& alpha);

/// The reconstruction map phi_i: Z^{sum_{p+q=i} h^{p,q}} plus the torsion
/// group rebuilt from a_{p,i,*}. Throws DomainError if alpha is not in R+.
FinAbGroup phi(const RingElement& alpha, unsigned i);

/// phi_i for every degree that can be nonzero, 0 .. top degree present.
std::vector<FinAbGroup> phi_all(const RingElement& alpha);

}  // namespace zhodge
