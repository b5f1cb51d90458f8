#include "zhodge/ring.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "zhodge/errors.hpp"

namespace zhodge {

namespace {

int idem_kind(const Idempotent& e) { return (e.s ? 1 : 0) + (e.r ? 2 : 0); }

using MainTerms = std::map<MainMonomial, BigInt>;

void accumulate(RingElement::Terms& terms, const BasisMonomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Reduces u^u v^v t^t x^x. Once x is present, ux -> tx and vx -> tx fold u
// and v into t; then t^a x^b (a >= 1, b >= 2) -> t^a x^(b-1) - t^(a-1) x^(b-1)
// until every term is t^a x or x^b. The measure (b, a) drops at each step.
MainTerms reduce_main(unsigned u, unsigned v, unsigned t, unsigned x) {
  MainTerms out;
  if (x == 0) {
    out.emplace(MainMonomial::uvt(u, v, t), 1);
    return out;
  }
  // Worklist keyed by (b, a) so the largest x-exponent is processed first.
  std::map<std::pair<unsigned, unsigned>, BigInt> work;
  work.emplace(std::pair{x, u + v + t}, 1);
  while (!work.empty()) {
    auto node = std::prev(work.end());
    const auto [b, a] = node->first;
    const BigInt c = node->second;
    work.erase(node);
    if (c == 0) continue;
    if (b == 1) {
      out[MainMonomial::tx(a)] += c;
    } else if (a == 0) {
      out[MainMonomial::xpow(b)] += c;
    } else {
      work[{b - 1, a}] += c;
      work[{b - 1, a - 1}] -= c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::optional<Idempotent> mul_idem(const Idempotent& a, const Idempotent& b) {
  Idempotent out = a;
  if (b.s) {
    if (out.s && *out.s != *b.s) return std::nullopt;
    out.s = b.s;
  }
  if (b.r) {
    if (out.r && *out.r != *b.r) return std::nullopt;
    out.r = b.r;
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const Idempotent& a, const Idempotent& b) {
  if (auto c = idem_kind(a) <=> idem_kind(b); c != 0) return c;
  if (a.s && b.s) {
    if (auto c = *a.s <=> *b.s; c != 0) return c;
  }
  if (a.r && b.r) return *a.r <=> *b.r;
  return std::strong_ordering::equal;
}

MainMonomial MainMonomial::xpow(unsigned e) {
  if (e < 2) throw InputError("x-power basis monomials need exponent >= 2");
  return {Kind::XPow, 0, 0, 0, e};
}

std::string BasisMonomial::str() const {
  std::vector<std::string> factors;
  auto var = [&factors](const char* name, unsigned e) {
    if (e == 0) return;
    factors.push_back(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
  };
  if (idem.s) factors.push_back("s_" + idem.s->str());
  if (idem.r) factors.push_back("r_" + std::to_string(*idem.r));
  var("u", main.u);
  var("v", main.v);
  var("t", main.t);
  var("x", main.x);
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out += "*" + factors[k];
  return out;
}

RingElement::RingElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

RingElement RingElement::constant(const BigInt& c) { return monomial(BasisMonomial{}, c); }

RingElement RingElement::monomial(const BasisMonomial& m, const BigInt& c) {
  Terms terms;
  if (c != 0) terms.emplace(m, c);
  return RingElement(std::move(terms));
}

BigInt RingElement::coefficient(const BasisMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt mag = abs(c);
    if (m.is_one()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << m.str();
    } else {
      os << mag.get_str() << '*' << m.str();
    }
  }
  return os.str();
}

RingElement add(const RingElement& a, const RingElement& b) {
  RingElement::Terms terms = a.terms();
  for (const auto& [m, c] : b.terms()) accumulate(terms, m, c);
  return RingElement(std::move(terms));
}

RingElement negate(const RingElement& a) {
  RingElement::Terms terms = a.terms();
  for (auto& kv : terms) kv.second = -kv.second;
  return RingElement(std::move(terms));
}

RingElement scalar_mul(const BigInt& n, const RingElement& a) {
  if (n == 0) return {};
  RingElement::Terms terms = a.terms();
  for (auto& kv : terms) kv.second *= n;
  return RingElement(std::move(terms));
}

RingElement mul(const BasisMonomial& a, const BasisMonomial& b) {
  auto idem = mul_idem(a.idem, b.idem);
  if (!idem) return {};
  RingElement::Terms terms;
  for (const auto& [main, c] : reduce_main(a.main.u + b.main.u, a.main.v + b.main.v,
                                           a.main.t + b.main.t, a.main.x + b.main.x)) {
    terms.emplace(BasisMonomial{*idem, main}, c);
  }
  return RingElement(std::move(terms));
}

RingElement mul(const RingElement& a, const RingElement& b) {
  RingElement::Terms terms;
  std::map<std::pair<MainMonomial, MainMonomial>, MainTerms> cache;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto idem = mul_idem(ma.idem, mb.idem);
      if (!idem) continue;
      auto key = ma.main < mb.main ? std::pair{ma.main, mb.main} : std::pair{mb.main, ma.main};
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache
                 .emplace(key, reduce_main(ma.main.u + mb.main.u, ma.main.v + mb.main.v,
                                           ma.main.t + mb.main.t, ma.main.x + mb.main.x))
                 .first;
      }
      const BigInt cc = ca * cb;
      for (const auto& [main, c] : it->second) {
        accumulate(terms, BasisMonomial{*idem, main}, cc * c);
      }
    }
  }
  return RingElement(std::move(terms));
}

RingElement power(const RingElement& a, unsigned k) {
  RingElement result = RingElement::one();
  RingElement base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

RingElement normal_form(const RawMonomial& m) {
  Idempotent idem;
  for (const auto& p : m.s) {
    if (idem.s && *idem.s != p) return {};
    idem.s = p;
  }
  for (unsigned j : m.r) {
    if (idem.r && *idem.r != j) return {};
    idem.r = j;
  }
  RingElement::Terms terms;
  for (const auto& [main, c] : reduce_main(m.u, m.v, m.t, m.x)) {
    terms.emplace(BasisMonomial{idem, main}, c);
  }
  return RingElement(std::move(terms));
}

Degree degree(const RingElement& a) {
  Degree out;
  for (const auto& kv : a.terms()) {
    const auto d = kv.first.degree();
    if (!out || d > *out) out = d;
  }
  return out;
}

bool is_in_subring_S(const RingElement& a) {
  return std::all_of(a.terms().begin(), a.terms().end(), [](const auto& kv) {
    return kv.first.main.u == 0 && kv.first.main.v == 0;
  });
}

std::string LocalizedElement::str() const {
  if (denom_exp == 0 || numerator.is_zero()) return numerator.str();
  std::string out = "(" + numerator.str() + ")/(u*v)";
  if (denom_exp > 1) out += "^" + std::to_string(denom_exp);
  return out;
}

LocalizedElement uv_power(std::int64_t k) {
  if (k >= 0) return {RingElement::uv_power(static_cast<unsigned>(k)), 0};
  return {RingElement::one(), static_cast<unsigned>(-k)};
}

LocalizedElement add(const LocalizedElement& a, const LocalizedElement& b) {
  const unsigned d = std::max(a.denom_exp, b.denom_exp);
  return {mul(a.numerator, RingElement::uv_power(d - a.denom_exp)) +
              mul(b.numerator, RingElement::uv_power(d - b.denom_exp)),
          d};
}

LocalizedElement negate(const LocalizedElement& a) { return {negate(a.numerator), a.denom_exp}; }

Degree degree(const LocalizedElement& a) {
  auto d = degree(a.numerator);
  if (d) *d -= 2 * static_cast<std::int64_t>(a.denom_exp);
  return d;
}

bool localized_equals(const LocalizedElement& a, const LocalizedElement& b,
                      const LocalizationOptions& options) {
  const RingElement lhs = mul(a.numerator, RingElement::uv_power(b.denom_exp));
  const RingElement rhs = mul(b.numerator, RingElement::uv_power(a.denom_exp));
  if (lhs == rhs) return true;
  if (!options.search_multipliers) return false;
  const RingElement diff = lhs - rhs;
  for (unsigned m = 1; m <= options.max_multiplier; ++m) {
    if (mul(diff, RingElement::uv_power(m)).is_zero()) return true;
  }
  return false;
}

}  // namespace zhodge
