#include "zhodge/hodge.hpp"

#include <algorithm>

#include "zhodge/errors.hpp"

namespace zhodge {

namespace {

BigInt sign(unsigned exponent) { return exponent % 2 == 0 ? BigInt(1) : BigInt(-1); }

}  // namespace

CohomologyProfile CohomologyProfile::make(std::string name, unsigned dim, HodgeNumbers hodge,
                                          TorsionGroups torsion) {
  std::erase_if(hodge, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(torsion, [](const auto& kv) { return kv.second.is_trivial(); });
  CohomologyProfile x{std::move(name), dim, std::move(hodge), std::move(torsion)};
  validate(x);
  return x;
}

std::uint64_t CohomologyProfile::hodge_number(unsigned p, unsigned q) const {
  auto it = hodge.find({p, q});
  return it == hodge.end() ? 0 : it->second;
}

std::uint64_t CohomologyProfile::betti(unsigned i) const {
  std::uint64_t total = 0;
  for (const auto& [pq, h] : hodge) {
    if (pq.first + pq.second == i) total += h;
  }
  return total;
}

FinAbGroup CohomologyProfile::torsion_at(unsigned i) const {
  auto it = torsion.find(i);
  return it == torsion.end() ? FinAbGroup{} : it->second;
}

FinAbGroup CohomologyProfile::cohomology(unsigned i) const {
  return direct_sum(FinAbGroup::free(betti(i)), torsion_at(i));
}

void validate(const CohomologyProfile& x) {
  const std::string where = "profile '" + x.name + "': ";
  for (const auto& [pq, h] : x.hodge) {
    if (pq.first > x.dim || pq.second > x.dim) {
      throw InputError(where + "h^{" + std::to_string(pq.first) + "," +
                       std::to_string(pq.second) + "} lies outside dimension " +
                       std::to_string(x.dim));
    }
  }
  for (const auto& [i, group] : x.torsion) {
    if (!group.is_torsion()) {
      throw InputError(where + "torsion group in degree " + std::to_string(i) +
                       " has a free part");
    }
    if (group.is_trivial()) continue;
    if (i < 2 || i > 2 * x.dim) {
      throw InputError(where + "torsion in degree " + std::to_string(i) +
                       " (allowed: 2.." + std::to_string(2 * x.dim) + ")");
    }
  }
}

std::vector<std::string> realizability_lints(const CohomologyProfile& x) {
  std::vector<std::string> out;
  const std::string where = "profile '" + x.name + "': ";
  for (const auto& [pq, h] : x.hodge) {
    const auto [p, q] = pq;
    if (x.hodge_number(q, p) != h) {
      out.push_back(where + "h^{" + std::to_string(p) + "," + std::to_string(q) +
                    "} != h^{" + std::to_string(q) + "," + std::to_string(p) + "}");
    }
    if (x.hodge_number(x.dim - p, x.dim - q) != h) {
      out.push_back(where + "h^{" + std::to_string(p) + "," + std::to_string(q) +
                    "} != h^{" + std::to_string(x.dim - p) + "," + std::to_string(x.dim - q) +
                    "}");
    }
  }
  for (const auto& [i, group] : x.torsion) {
    const unsigned dual = 2 * x.dim + 1 - i;
    if (x.torsion_at(dual) != group) {
      out.push_back(where + "H^" + std::to_string(i) + "_tors is not isomorphic to H^" +
                    std::to_string(dual) + "_tors");
    }
  }
  return out;
}

std::string describe(const CohomologyProfile& x) {
  std::string out = x.name + " (dim " + std::to_string(x.dim) + "):";
  for (const auto& [pq, h] : x.hodge) {
    out += " h" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "=" +
           std::to_string(h);
  }
  if (!x.torsion.empty()) {
    out += ";";
    for (const auto& [i, group] : x.torsion) out += " H" + std::to_string(i) + "=" + group.str();
  }
  return out;
}

CohomologyProfile point_profile() { return CohomologyProfile::make("point", 0, {{{0, 0}, 1}}); }

CohomologyProfile projective_space_profile(unsigned n) {
  CohomologyProfile::HodgeNumbers h;
  for (unsigned k = 0; k <= n; ++k) h[{k, k}] = 1;
  return CohomologyProfile::make("P" + std::to_string(n), n, std::move(h));
}

std::uint64_t a_pij(const CohomologyProfile& x, const Prime& p, unsigned i, unsigned j) {
  return a_invariant(x.torsion_at(i), p, j);
}

RingElement torsion_poincare(const CohomologyProfile& x) {
  RingElement::Terms terms;
  for (const auto& [i, group] : x.torsion) {
    for (const auto& [key, a] : invariant_table(group)) {
      const auto& [p, j] = key;
      terms.emplace(BasisMonomial{Idempotent::sr(p, j), MainMonomial::tx(i)},
                    sign(i) * BigInt(static_cast<long>(a)));
    }
  }
  return RingElement(std::move(terms));
}

RingElement integral_hodge(const CohomologyProfile& x) {
  RingElement::Terms terms = torsion_poincare(x).terms();
  for (const auto& [pq, h] : x.hodge) {
    const auto [p, q] = pq;
    BigInt c = sign(p + q);
    c *= static_cast<unsigned long>(h);
    terms.emplace(BasisMonomial{Idempotent::one(), MainMonomial::uvt(p, q, 0)}, c);
  }
  return RingElement(std::move(terms));
}

std::optional<RPlusData> extract_r_plus(const RingElement& alpha) {
  RPlusData data;
  for (const auto& [m, c] : alpha.terms()) {
    switch (m.main.kind) {
      case MainMonomial::Kind::UVT: {
        if (!m.idem.is_one() || m.main.t != 0) return std::nullopt;
        const BigInt h = sign(m.main.u + m.main.v) * c;
        if (h < 0) return std::nullopt;
        data.hodge[{m.main.u, m.main.v}] = h;
        break;
      }
      case MainMonomial::Kind::TX: {
        if (!m.idem.s || !m.idem.r) return std::nullopt;
        const BigInt a = sign(m.main.t) * c;
        if (a < 0 || !a.fits_slong_p()) return std::nullopt;
        data.invariants[m.main.t][{*m.idem.s, *m.idem.r}] = a.get_si();
        break;
      }
      case MainMonomial::Kind::XPow:
        return std::nullopt;
    }
  }
  // a_{p,i,j-1} >= a_{p,i,j}, with absent entries read as zero.
  for (const auto& [i, table] : data.invariants) {
    for (const auto& [key, a] : table) {
      const auto& [p, j] = key;
      if (j == 0) continue;
      auto prev = table.find({p, j - 1});
      if (prev == table.end() || prev->second < a) return std::nullopt;
    }
  }
  return data;
}

bool is_in_r_plus(const RingElement& alpha) { return extract_r_plus(alpha).has_value(); }

namespace {

FinAbGroup phi_from(const RPlusData& data, unsigned i) {
  BigInt rank = 0;
  for (const auto& [pq, h] : data.hodge) {
    if (pq.first + pq.second == i) rank += h;
  }
  if (!rank.fits_ulong_p()) throw DomainError("free rank too large: " + rank.get_str());
  auto it = data.invariants.find(i);
  const FinAbGroup torsion = it == data.invariants.end() ? FinAbGroup{} : from_invariants(it->second);
  return direct_sum(FinAbGroup::free(rank.get_ui()), torsion);
}

}  // namespace

FinAbGroup phi(const RingElement& alpha, unsigned i) {
  auto data = extract_r_plus(alpha);
  if (!data) throw DomainError("element is not in R+: " + alpha.str());
  return phi_from(*data, i);
}

std::vector<FinAbGroup> phi_all(const RingElement& alpha) {
  auto data = extract_r_plus(alpha);
  if (!data) throw DomainError("element is not in R+: " + alpha.str());
  unsigned top = 0;
  for (const auto& kv : data->hodge) top = std::max(top, kv.first.first + kv.first.second);
  if (!data->invariants.empty()) top = std::max(top, data->invariants.rbegin()->first);
  std::vector<FinAbGroup> out;
  out.reserve(top + 1);
  for (unsigned i = 0; i <= top; ++i) out.push_back(phi_from(*data, i));
  return out;
}

}  // namespace zhodge
