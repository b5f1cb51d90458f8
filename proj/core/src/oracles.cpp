#include "zhodge/oracles.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace zhodge::oracle {

namespace {

struct Summands {
  std::uint64_t free = 0;
  std::vector<BigInt> orders;
};

Summands expand(const FinAbGroup& a) {
  Summands s;
  s.free = a.free_rank();
  for (const auto& [p, exps] : a.torsion()) {
    for (unsigned k : exps) s.orders.push_back(pow(p.value(), k));
  }
  return s;
}

void add_cyclic(FinAbGroup::TorsionMap& torsion, BigInt n) {
  for (BigInt d = 2; d * d <= n; ++d) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) torsion[Prime(d)].push_back(k);
  }
  if (n > 1) torsion[Prime(n)].push_back(1);
}

BigInt gcd_big(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b) {
  const Summands sa = expand(a);
  const Summands sb = expand(b);
  FinAbGroup::TorsionMap torsion;
  for (const auto& n : sa.orders) {
    for (std::uint64_t k = 0; k < sb.free; ++k) add_cyclic(torsion, n);
    for (const auto& m : sb.orders) {
      const BigInt g = gcd_big(n, m);
      if (g > 1) add_cyclic(torsion, g);
    }
  }
  for (const auto& m : sb.orders) {
    for (std::uint64_t k = 0; k < sa.free; ++k) add_cyclic(torsion, m);
  }
  return FinAbGroup(sa.free * sb.free, std::move(torsion));
}

std::uint64_t a_invariant(const FinAbGroup& a, const Prime& p, unsigned j) {
  const Summands s = expand(a);
  auto order_of_multiple = [&](unsigned e) {
    const BigInt pe = pow(p.value(), e);
    BigInt total = 1;
    for (const auto& n : s.orders) total *= n / gcd_big(n, pe);
    return total;
  };
  BigInt ratio = order_of_multiple(j) / order_of_multiple(j + 1);
  std::uint64_t rank = 0;
  while (ratio > 1) {
    ratio /= p.value();
    ++rank;
  }
  return rank;
}

namespace {

struct RawTerm {
  std::vector<BigInt> s;  // sorted
  std::vector<unsigned> r;  // sorted
  unsigned u = 0, v = 0, t = 0, x = 0;

  friend bool operator<(const RawTerm& a, const RawTerm& b) {
    if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
    for (std::size_t k = 0; k < a.s.size(); ++k) {
      if (int c = cmp(a.s[k], b.s[k]); c != 0) return c < 0;
    }
    return std::tie(a.r, a.u, a.v, a.t, a.x) < std::tie(b.r, b.u, b.v, b.t, b.x);
  }
};

enum class Rule { SameS, DistinctS, SameR, DistinctR, UX, VX, TXX };

std::vector<std::pair<Rule, std::size_t>> applicable(const RawTerm& m) {
  std::vector<std::pair<Rule, std::size_t>> out;
  for (std::size_t k = 0; k + 1 < m.s.size(); ++k) {
    out.emplace_back(m.s[k] == m.s[k + 1] ? Rule::SameS : Rule::DistinctS, k);
  }
  for (std::size_t k = 0; k + 1 < m.r.size(); ++k) {
    out.emplace_back(m.r[k] == m.r[k + 1] ? Rule::SameR : Rule::DistinctR, k);
  }
  if (m.u >= 1 && m.x >= 1) out.emplace_back(Rule::UX, 0);
  if (m.v >= 1 && m.x >= 1) out.emplace_back(Rule::VX, 0);
  if (m.t >= 1 && m.x >= 2) out.emplace_back(Rule::TXX, 0);
  return out;
}

}  // namespace

RingElement randomized_rewrite(const RawMonomial& m, Rng& rng, bool corrupt) {
  RawTerm start;
  for (const auto& p : m.s) start.s.push_back(p.value());
  std::sort(start.s.begin(), start.s.end(), [](const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; });
  start.r = m.r;
  std::sort(start.r.begin(), start.r.end());
  start.u = m.u;
  start.v = m.v;
  start.t = m.t;
  start.x = m.x;

  std::map<RawTerm, BigInt> pending{{start, 1}};
  std::map<RawTerm, BigInt> done;
  auto add = [](std::map<RawTerm, BigInt>& into, const RawTerm& term, const BigInt& c) {
    auto& slot = into[term];
    slot += c;
    if (slot == 0) into.erase(term);
  };

  while (!pending.empty()) {
    auto it = pending.begin();
    std::advance(it, static_cast<long>(rng.below(pending.size())));
    const RawTerm term = it->first;
    const BigInt c = it->second;
    pending.erase(it);
    const auto rules = applicable(term);
    if (rules.empty()) {
      add(done, term, c);
      continue;
    }
    const auto [rule, at] = rules[rng.below(rules.size())];
    RawTerm next = term;
    switch (rule) {
      case Rule::SameS:
        next.s.erase(next.s.begin() + static_cast<long>(at));
        add(pending, next, c);
        break;
      case Rule::SameR:
        next.r.erase(next.r.begin() + static_cast<long>(at));
        add(pending, next, c);
        break;
      case Rule::DistinctS:
      case Rule::DistinctR:
        break;  // the term vanishes
      case Rule::UX:
        --next.u;
        ++next.t;
        add(pending, next, c);
        break;
      case Rule::VX:
        --next.v;
        ++next.t;
        add(pending, next, c);
        break;
      case Rule::TXX: {
        // t x^2 -> t x - x
        --next.x;
        add(pending, next, c);
        RawTerm other = next;
        --other.t;
        add(pending, other, corrupt ? BigInt(c) : BigInt(-c));
        break;
      }
    }
  }

  RingElement::Terms terms;
  for (const auto& [term, c] : done) {
    BasisMonomial b;
    if (!term.s.empty()) b.idem.s = Prime(term.s.front());
    if (!term.r.empty()) b.idem.r = term.r.front();
    if (term.x == 0) {
      b.main = MainMonomial::uvt(term.u, term.v, term.t);
    } else if (term.x == 1) {
      b.main = MainMonomial::tx(term.t);
    } else {
      b.main = MainMonomial::xpow(term.x);
    }
    terms[b] += c;
  }
  return RingElement(std::move(terms));
}

std::vector<std::uint64_t> gaussian_binomial(unsigned n, unsigned k) {
  // Pascal recurrence [n, k] = [n-1, k-1] + q^k [n-1, k].
  if (k > n) return {};
  std::vector<std::vector<std::vector<std::uint64_t>>> table(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    table[m].resize(m + 1);
    table[m][0] = {1};
    table[m][m] = {1};
    for (unsigned j = 1; j < m; ++j) {
      const auto& a = table[m - 1][j - 1];
      const auto& b = table[m - 1][j];
      std::vector<std::uint64_t> c(std::max(a.size(), b.size() + j), 0);
      for (std::size_t d = 0; d < a.size(); ++d) c[d] += a[d];
      for (std::size_t d = 0; d < b.size(); ++d) c[d + j] += b[d];
      table[m][j] = std::move(c);
    }
  }
  return table[n][k];
}

}  // namespace zhodge::oracle
