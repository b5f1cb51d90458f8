#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zhodge/hodge.hpp"
#include "zhodge/ring.hpp"

namespace zhodge {

/// Integral Kunneth formula: H^i(X x Y) is the torsion-and-free sum of
/// H^c(X) (x) H^d(Y) over c + d = i plus Tor(H^c(X), H^d(Y)) over
/// c + d = i + 1. Hodge numbers convolve.
CohomologyProfile kunneth_product_profile(const CohomologyProfile& x, const CohomologyProfile& y);

/// H_Z(X x Y) evaluated coefficient-by-coefficient from the Hodge numbers and
/// torsion invariants of the factors, without using multiplication in R:
///   free x free      sum (-1)^{p+q} h^{e,g}(X) h^{f,h}(Y) u^p v^q
///   free x torsion   (-1)^i sum_{p+q+c=i} (h^{p,q}(X) a_{p,c,j}(Y) + a_{p,c,j}(X) h^{p,q}(Y))
///   torsion x torsion (-1)^i (sum_{c+d=i} + sum_{c+d=i+1}) a_{p,c,j}(X) a_{p,d,j}(Y)
/// with the last two multiplying s_p r_j t^i x.
RingElement product_hz_direct(const CohomologyProfile& x, const CohomologyProfile& y);

struct BlowupProfiles {
  CohomologyProfile blowup;      ///< Bl_Z(X)
  CohomologyProfile exceptional; ///< E, a P^{c-1}-bundle over Z
};

/// Cohomology of the blow-up of X along Z (codimension c) and of its
/// exceptional divisor:
///   H^k(Bl) = H^k(X) + sum_{i=1}^{c-1} H^{k-2i}(Z)
///   H^k(E)  =          sum_{i=0}^{c-1} H^{k-2i}(Z)
/// with each shifted copy of Z carrying Hodge type shifted by (i, i).
/// Throws InputError unless c >= 2 and dim Z + c = dim X.
BlowupProfiles blowup_profiles(const CohomologyProfile& x, const CohomologyProfile& z, unsigned c);

/// Formal integer combination of terms [X_1]...[X_k] L^l, modelling
/// K_0(Var)[L^-1] as a free term algebra. The empty product with l = 0 is the
/// class of a point. Atoms are profiles, identified by name; combining two
/// classes that bind one name to different cohomology throws InputError.
class VirtualClass {
 public:
  struct Term {
    std::vector<std::string> factors;  ///< sorted, repeats allowed
    std::int64_t lefschetz = 0;        ///< power of L, may be negative

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
  };
  using Terms = std::map<Term, BigInt>;
  using Atoms = std::map<std::string, CohomologyProfile>;

  /// The zero class.
  VirtualClass() = default;

  static VirtualClass integer(const BigInt& n);
  static VirtualClass point() { return integer(1); }
  /// [X] for the profile X.
  static VirtualClass of(const CohomologyProfile& x);
  /// L^k.
  static VirtualClass lefschetz(std::int64_t k);

  const Terms& terms() const noexcept { return terms_; }
  const Atoms& atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// E.g. "[P2]*[E] - L^2 + 3*L^-1"; "0" for the zero class.
  std::string str() const;

  friend VirtualClass operator+(const VirtualClass& a, const VirtualClass& b);
  friend VirtualClass operator-(const VirtualClass& a);
  friend VirtualClass operator-(const VirtualClass& a, const VirtualClass& b) { return a + (-b); }
  friend VirtualClass operator*(const VirtualClass& a, const VirtualClass& b);
  friend VirtualClass operator*(const BigInt& n, const VirtualClass& a);

  /// Syntactic equality of the normalized term maps.
  friend bool operator==(const VirtualClass& a, const VirtualClass& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void merge_atoms(const Atoms& other);

  Terms terms_;
  Atoms atoms_;
};

/// a^k for k >= 0.
VirtualClass power(const VirtualClass& a, unsigned k);

/// The integral virtual Hodge function into R[(uv)^-1]: each term maps to
/// the product of H_Z of its factors times (uv)^l. Terms are brought over the
/// smallest common denominator (uv)^d, d = max(0, -min l); no further
/// cancellation is attempted.
LocalizedElement h_vir(const VirtualClass& v);

/// Sum over cells of L^dim(cell).
VirtualClass cell_decomposition_class(const std::vector<unsigned>& cell_dims);

/// H_vir(X) == H_vir(U) + H_vir(complement) in R[(uv)^-1].
bool cut_and_paste_check(const VirtualClass& x, const VirtualClass& u,
                         const VirtualClass& complement,
                         const LocalizationOptions& options = {});

/// deg H_vir([X] L^-i) <= 2 (dim X - i).
bool filtration_degree_check(const CohomologyProfile& x, unsigned i);

}  // namespace zhodge
