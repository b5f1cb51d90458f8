#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zhodge/prime.hpp"

namespace zhodge {

// The ring R is Z[s_p, r_j] / (s_p^2 = s_p, r_j^2 = r_j, s_p s_p' = r_j r_j' = 0)
// tensored with Z[u, v, t, x] / (t x^2 = t x - x, u x = v x = t x).
//
// A Z-basis of the first factor is {1, s_p, r_j, s_p r_j}; of the second
// {u^p v^q t^i, t^i x, x^e (e >= 2)}. Elements are stored as sparse integer
// combinations of products of the two, always fully reduced.

/// Basis element of the idempotent factor: 1, s_p, r_j or s_p r_j.
struct Idempotent {
  std::optional<Prime> s;
  std::optional<unsigned> r;

  static Idempotent one() { return {}; }
  static Idempotent sr(const Prime& p, unsigned j) { return {p, j}; }

  bool is_one() const noexcept { return !s && !r; }

  friend bool operator==(const Idempotent&, const Idempotent&) = default;
  // 1 < s_p (by p) < r_j (by j) < s_p r_j (by p, then j).
  friend std::strong_ordering operator<=>(const Idempotent& a, const Idempotent& b);
};

/// Basis element of the polynomial factor.
struct MainMonomial {
  enum class Kind : std::uint8_t { UVT = 0, TX = 1, XPow = 2 };

  Kind kind = Kind::UVT;
  unsigned u = 0;
  unsigned v = 0;
  unsigned t = 0;
  unsigned x = 0;  // 1 for TX, e >= 2 for XPow, 0 otherwise

  static MainMonomial uvt(unsigned p, unsigned q, unsigned i) { return {Kind::UVT, p, q, i, 0}; }
  static MainMonomial tx(unsigned i) { return {Kind::TX, 0, 0, i, 1}; }
  /// Throws InputError if e < 2.
  static MainMonomial xpow(unsigned e);

  friend bool operator==(const MainMonomial&, const MainMonomial&) = default;
  // UVT by (p, q, i) < TX by i < XPow by e.
  friend auto operator<=>(const MainMonomial&, const MainMonomial&) = default;
};

struct BasisMonomial {
  Idempotent idem;
  MainMonomial main;

  bool is_one() const noexcept { return idem.is_one() && main == MainMonomial{}; }
  /// Sum of the t, u and v exponents; x-powers contribute nothing.
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(main.u) + main.v + main.t;
  }
  std::string str() const;

  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
  friend std::strong_ordering operator<=>(const BasisMonomial& a, const BasisMonomial& b) {
    if (auto c = a.idem <=> b.idem; c != 0) return c;
    return a.main <=> b.main;
  }
};

/// An unreduced product of generators: s and r may repeat, exponents are free.
struct RawMonomial {
  std::vector<Prime> s;
  std::vector<unsigned> r;
  unsigned u = 0;
  unsigned v = 0;
  unsigned t = 0;
  unsigned x = 0;
};

class RingElement {
 public:
  using Terms = std::map<BasisMonomial, BigInt>;

  RingElement() = default;
  explicit RingElement(Terms terms);

  static RingElement zero() { return {}; }
  static RingElement one() { return constant(1); }
  static RingElement constant(const BigInt& c);
  static RingElement monomial(const BasisMonomial& m, const BigInt& c = 1);

  static RingElement u() { return monomial({{}, MainMonomial::uvt(1, 0, 0)}); }
  static RingElement v() { return monomial({{}, MainMonomial::uvt(0, 1, 0)}); }
  static RingElement t() { return monomial({{}, MainMonomial::uvt(0, 0, 1)}); }
  static RingElement x() { return monomial({{}, MainMonomial::tx(0)}); }
  static RingElement s(const Prime& p) { return monomial({{p, std::nullopt}, {}}); }
  static RingElement r(unsigned j) { return monomial({{std::nullopt, j}, {}}); }
  /// (uv)^k.
  static RingElement uv_power(unsigned k) { return monomial({{}, MainMonomial::uvt(k, k, 0)}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const BasisMonomial& m) const;

  /// Canonical text, monomials in the fixed total order, e.g.
  /// "1 + 10*u*v + u^2*v^2 + s_2*r_0*t^2*x - s_2*r_0*t^3*x". Zero is "0".
  std::string str() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Terms terms_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement negate(const RingElement& a);
RingElement scalar_mul(const BigInt& n, const RingElement& a);
RingElement mul(const RingElement& a, const RingElement& b);
/// a^k by repeated squaring.
RingElement power(const RingElement& a, unsigned k);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a) { return negate(a); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return add(a, negate(b)); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
inline RingElement operator*(const BigInt& n, const RingElement& a) { return scalar_mul(n, a); }
inline RingElement operator*(long n, const RingElement& a) { return scalar_mul(BigInt(n), a); }

/// Product of two basis monomials, reduced.
RingElement mul(const BasisMonomial& a, const BasisMonomial& b);

/// Reduces an arbitrary product of generators to the canonical basis.
RingElement normal_form(const RawMonomial& m);

/// Degree: the largest t+u+v exponent sum over monomials present;
/// std::nullopt stands for minus infinity (the zero element).
using Degree = std::optional<std::int64_t>;
Degree degree(const RingElement& a);

/// True when no monomial involves u or v, i.e. the element lies in S.
bool is_in_subring_S(const RingElement& a);

/// numerator * (uv)^(-denom_exp), an element of R[(uv)^-1].
struct LocalizedElement {
  RingElement numerator;
  unsigned denom_exp = 0;

  /// "numerator" when denom_exp = 0, otherwise "(numerator)/(u*v)^d".
  std::string str() const;
};

/// (uv)^k for any integer k.
LocalizedElement uv_power(std::int64_t k);

LocalizedElement add(const LocalizedElement& a, const LocalizedElement& b);
LocalizedElement negate(const LocalizedElement& a);

/// degree(numerator) - 2 * denom_exp.
Degree degree(const LocalizedElement& a);

struct LocalizationOptions {
  /// Also accept a (uv)^m multiplier witnessing equality, m <= max_multiplier.
  /// Only matters if uv were a zero divisor; it is not, so this is a
  /// cross-check rather than a change of semantics.
  bool search_multipliers = false;
  unsigned max_multiplier = 4;
};

/// Equality in R[(uv)^-1] by cross-multiplication.
bool localized_equals(const LocalizedElement& a, const LocalizedElement& b,
                      const LocalizationOptions& options = {});

}  // namespace zhodge
