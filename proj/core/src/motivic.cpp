#include "zhodge/motivic.hpp"

#include <algorithm>
#include <sstream>

#include "zhodge/errors.hpp"

namespace zhodge {

namespace {

BigInt sign(std::int64_t exponent) { return exponent % 2 == 0 ? BigInt(1) : BigInt(-1); }

BigInt big(std::uint64_t n) { return BigInt(static_cast<unsigned long>(n)); }

void accumulate(RingElement::Terms& terms, const BasisMonomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// H^c(X) for every c in 0..2 dim X.
std::vector<FinAbGroup> cohomology_groups(const CohomologyProfile& x) {
  std::vector<FinAbGroup> out;
  for (unsigned c = 0; c <= 2 * x.dim; ++c) out.push_back(x.cohomology(c));
  return out;
}

// Hodge numbers with every (p, q) moved to (p + i, q + i).
CohomologyProfile::HodgeNumbers shifted(const CohomologyProfile::HodgeNumbers& h, unsigned i) {
  CohomologyProfile::HodgeNumbers out;
  for (const auto& [pq, value] : h) out[{pq.first + i, pq.second + i}] = value;
  return out;
}

void add_into(CohomologyProfile::HodgeNumbers& dst, const CohomologyProfile::HodgeNumbers& src) {
  for (const auto& [pq, value] : src) dst[pq] += value;
}

void add_into(CohomologyProfile::TorsionGroups& dst, const CohomologyProfile::TorsionGroups& src,
              unsigned shift) {
  for (const auto& [k, group] : src) dst[k + shift] = direct_sum(dst[k + shift], group);
}

}  // namespace

CohomologyProfile kunneth_product_profile(const CohomologyProfile& x, const CohomologyProfile& y) {
  CohomologyProfile::HodgeNumbers hodge;
  for (const auto& [eg, hx] : x.hodge) {
    for (const auto& [fh, hy] : y.hodge) {
      hodge[{eg.first + fh.first, eg.second + fh.second}] += hx * hy;
    }
  }

  const auto hx = cohomology_groups(x);
  const auto hy = cohomology_groups(y);
  CohomologyProfile::TorsionGroups torsion;
  for (unsigned c = 0; c < hx.size(); ++c) {
    for (unsigned d = 0; d < hy.size(); ++d) {
      const FinAbGroup prod = tensor(hx[c], hy[d]).torsion_part();
      if (!prod.is_trivial()) torsion[c + d] = direct_sum(torsion[c + d], prod);
      const FinAbGroup t = tor(hx[c], hy[d]);
      if (!t.is_trivial()) torsion[c + d - 1] = direct_sum(torsion[c + d - 1], t);
    }
  }
  return CohomologyProfile::make(x.name + "*" + y.name, x.dim + y.dim, std::move(hodge),
                                 std::move(torsion));
}

RingElement product_hz_direct(const CohomologyProfile& x, const CohomologyProfile& y) {
  RingElement::Terms terms;

  // Free parts of both factors.
  for (const auto& [eg, hx] : x.hodge) {
    for (const auto& [fh, hy] : y.hodge) {
      const unsigned p = eg.first + fh.first;
      const unsigned q = eg.second + fh.second;
      accumulate(terms, {Idempotent::one(), MainMonomial::uvt(p, q, 0)},
                 sign(p + q) * big(hx) * big(hy));
    }
  }

  // Free part of one factor against torsion of the other.
  auto mixed = [&terms](const CohomologyProfile& free_side, const CohomologyProfile& tors_side) {
    for (const auto& [pq, h] : free_side.hodge) {
      for (const auto& [c, group] : tors_side.torsion) {
        const unsigned i = pq.first + pq.second + c;
        for (const auto& [key, a] : invariant_table(group)) {
          accumulate(terms, {Idempotent::sr(key.first, key.second), MainMonomial::tx(i)},
                     sign(i) * big(h) * BigInt(static_cast<long>(a)));
        }
      }
    }
  };
  mixed(x, y);
  mixed(y, x);

  // Torsion against torsion: the tensor term lands in degree c + d, the Tor
  // term in degree c + d - 1, with the same coefficient a_X * a_Y.
  for (const auto& [c, gx] : x.torsion) {
    const auto tx = invariant_table(gx);
    for (const auto& [d, gy] : y.torsion) {
      const auto ty = invariant_table(gy);
      for (const auto& [key, ax] : tx) {
        auto it = ty.find(key);
        if (it == ty.end()) continue;
        const BigInt prod = BigInt(static_cast<long>(ax)) * BigInt(static_cast<long>(it->second));
        const Idempotent idem = Idempotent::sr(key.first, key.second);
        accumulate(terms, {idem, MainMonomial::tx(c + d)}, sign(c + d) * prod);
        accumulate(terms, {idem, MainMonomial::tx(c + d - 1)}, sign(c + d - 1) * prod);
      }
    }
  }
  return RingElement(std::move(terms));
}

BlowupProfiles blowup_profiles(const CohomologyProfile& x, const CohomologyProfile& z, unsigned c) {
  if (c < 2) throw InputError("blow-up codimension must be at least 2, got " + std::to_string(c));
  if (z.dim + c != x.dim) {
    throw InputError("dimension mismatch: dim Z + c = " + std::to_string(z.dim + c) +
                     " but dim X = " + std::to_string(x.dim));
  }
  CohomologyProfile::HodgeNumbers bl_hodge = x.hodge;
  CohomologyProfile::TorsionGroups bl_torsion = x.torsion;
  CohomologyProfile::HodgeNumbers e_hodge;
  CohomologyProfile::TorsionGroups e_torsion;
  for (unsigned i = 0; i < c; ++i) {
    const auto h = shifted(z.hodge, i);
    add_into(e_hodge, h);
    add_into(e_torsion, z.torsion, 2 * i);
    if (i >= 1) {
      add_into(bl_hodge, h);
      add_into(bl_torsion, z.torsion, 2 * i);
    }
  }
  return {
      CohomologyProfile::make("Bl_" + z.name + "(" + x.name + ")", x.dim, std::move(bl_hodge),
                              std::move(bl_torsion)),
      CohomologyProfile::make("E_" + z.name + "(" + x.name + ")", x.dim - 1, std::move(e_hodge),
                              std::move(e_torsion)),
  };
}

// ---------------------------------------------------------------------------
// VirtualClass

VirtualClass VirtualClass::integer(const BigInt& n) {
  VirtualClass out;
  if (n != 0) out.terms_.emplace(Term{}, n);
  return out;
}

VirtualClass VirtualClass::of(const CohomologyProfile& x) {
  if (x.name.empty()) throw InputError("profiles used in virtual classes need a name");
  VirtualClass out;
  out.terms_.emplace(Term{{x.name}, 0}, 1);
  out.atoms_.emplace(x.name, x);
  return out;
}

VirtualClass VirtualClass::lefschetz(std::int64_t k) {
  VirtualClass out;
  out.terms_.emplace(Term{{}, k}, 1);
  return out;
}

void VirtualClass::merge_atoms(const Atoms& other) {
  for (const auto& [name, profile] : other) {
    auto [it, inserted] = atoms_.emplace(name, profile);
    if (!inserted && !it->second.same_cohomology(profile)) {
      throw InputError("name '" + name + "' is bound to two different profiles");
    }
  }
}

VirtualClass operator+(const VirtualClass& a, const VirtualClass& b) {
  VirtualClass out = a;
  out.merge_atoms(b.atoms_);
  for (const auto& [term, c] : b.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(term, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

VirtualClass operator-(const VirtualClass& a) {
  VirtualClass out = a;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

VirtualClass operator*(const BigInt& n, const VirtualClass& a) {
  if (n == 0) {
    VirtualClass out;
    out.atoms_ = a.atoms_;
    return out;
  }
  VirtualClass out = a;
  for (auto& kv : out.terms_) kv.second *= n;
  return out;
}

VirtualClass operator*(const VirtualClass& a, const VirtualClass& b) {
  VirtualClass out;
  out.atoms_ = a.atoms_;
  out.merge_atoms(b.atoms_);
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      VirtualClass::Term term;
      term.factors.reserve(ta.factors.size() + tb.factors.size());
      std::merge(ta.factors.begin(), ta.factors.end(), tb.factors.begin(), tb.factors.end(),
                 std::back_inserter(term.factors));
      term.lefschetz = ta.lefschetz + tb.lefschetz;
      auto [it, inserted] = out.terms_.try_emplace(std::move(term), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

VirtualClass power(const VirtualClass& a, unsigned k) {
  VirtualClass out = VirtualClass::point();
  for (unsigned n = 0; n < k; ++n) out = out * a;
  return out;
}

std::string VirtualClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [term, c] : terms_) {
    std::string body;
    for (const auto& f : term.factors) {
      if (!body.empty()) body += "*";
      body += "[" + f + "]";
    }
    if (term.lefschetz != 0) {
      if (!body.empty()) body += "*";
      body += "L";
      if (term.lefschetz != 1) body += "^" + std::to_string(term.lefschetz);
    }
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt mag = abs(c);
    if (body.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << body;
    } else {
      os << mag.get_str() << '*' << body;
    }
  }
  return os.str();
}

LocalizedElement h_vir(const VirtualClass& v) {
  std::int64_t min_l = 0;
  for (const auto& kv : v.terms()) min_l = std::min(min_l, kv.first.lefschetz);
  const auto d = static_cast<unsigned>(-min_l);

  std::map<std::string, RingElement> hz;
  for (const auto& [name, profile] : v.atoms()) hz.emplace(name, integral_hodge(profile));

  RingElement numerator;
  for (const auto& [term, c] : v.terms()) {
    RingElement prod = RingElement::uv_power(static_cast<unsigned>(term.lefschetz + d));
    for (const auto& f : term.factors) prod = mul(prod, hz.at(f));
    numerator = numerator + scalar_mul(c, prod);
  }
  return {std::move(numerator), d};
}

VirtualClass cell_decomposition_class(const std::vector<unsigned>& cell_dims) {
  VirtualClass out;
  for (unsigned k : cell_dims) out = out + VirtualClass::lefschetz(k);
  return out;
}

bool cut_and_paste_check(const VirtualClass& x, const VirtualClass& u,
                         const VirtualClass& complement, const LocalizationOptions& options) {
  return localized_equals(h_vir(x), add(h_vir(u), h_vir(complement)), options);
}

bool filtration_degree_check(const CohomologyProfile& x, unsigned i) {
  const auto deg =
      degree(h_vir(VirtualClass::of(x) * VirtualClass::lefschetz(-static_cast<std::int64_t>(i))));
  return !deg || *deg <= 2 * (static_cast<std::int64_t>(x.dim) - static_cast<std::int64_t>(i));
}

}  // namespace zhodge
