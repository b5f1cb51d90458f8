#include "zhodge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "zhodge/errors.hpp"
#include "zhodge/hodge.hpp"
#include "zhodge/motivic.hpp"
#include "zhodge/oracles.hpp"
#include "zhodge/random.hpp"

namespace zhodge {

namespace {

using CaseResult = std::optional<std::string>;
using CaseFn = std::function<CaseResult(std::uint64_t seed, bool corrupt)>;

std::set<Prime> torsion_primes(const CohomologyProfile& x) {
  std::set<Prime> out;
  for (const auto& kv : x.torsion) {
    for (const auto& tp : kv.second.torsion()) out.insert(tp.first);
  }
  return out;
}

std::string deg_str(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

bool deg_le(const Degree& a, const Degree& b) {
  if (!a) return true;
  if (!b) return false;
  return *a <= *b;
}

Degree deg_max(const Degree& a, const Degree& b) { return deg_le(a, b) ? b : a; }

Degree deg_sum(const Degree& a, const Degree& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// Kunneth without the Tor contribution; only used to corrupt the oracle.
CohomologyProfile kunneth_without_tor(const CohomologyProfile& x, const CohomologyProfile& y) {
  CohomologyProfile::HodgeNumbers hodge;
  for (const auto& [eg, hx] : x.hodge) {
    for (const auto& [fh, hy] : y.hodge) hodge[{eg.first + fh.first, eg.second + fh.second}] += hx * hy;
  }
  CohomologyProfile::TorsionGroups torsion;
  for (unsigned c = 0; c <= 2 * x.dim; ++c) {
    for (unsigned d = 0; d <= 2 * y.dim; ++d) {
      const auto g = tensor(x.cohomology(c), y.cohomology(d)).torsion_part();
      torsion[c + d] = direct_sum(torsion[c + d], g);
    }
  }
  return CohomologyProfile::make(x.name + "*" + y.name, x.dim + y.dim, std::move(hodge),
                                 std::move(torsion));
}

CaseResult kunneth_case(std::uint64_t seed, bool corrupt) {
  Rng rng(seed);
  const ProfileParams params;
  CohomologyProfile x;
  CohomologyProfile y;
  // Redraw until the pair carries torsion at two or more primes.
  for (;;) {
    x = random_profile(rng, params, "X");
    y = random_profile(rng, params, "Y");
    auto primes = torsion_primes(x);
    primes.merge(torsion_primes(y));
    if (primes.size() >= 2) break;
  }
  const RingElement product = integral_hodge(x) * integral_hodge(y);
  const RingElement direct = product_hz_direct(x, y);
  const RingElement oracle =
      integral_hodge(corrupt ? kunneth_without_tor(x, y) : kunneth_product_profile(x, y));
  if (product == direct && direct == oracle) return std::nullopt;
  std::ostringstream os;
  os << "  X = " << describe(x) << "\n"
     << "  Y = " << describe(y) << "\n"
     << "  H_Z(X)H_Z(Y)      = " << product.str() << "\n"
     << "  direct formula    = " << direct.str() << "\n"
     << "  H_Z(Kunneth(X,Y)) = " << oracle.str() << "\n";
  return os.str();
}

CaseResult blowup_case(std::uint64_t seed, bool corrupt) {
  Rng rng(seed);
  const ProfileParams params;
  const auto c = static_cast<unsigned>(rng.between(2, 5));
  const auto dz = static_cast<unsigned>(rng.between(0, 2));
  const CohomologyProfile x = random_profile_of_dim(rng, params, dz + c, "X");
  const CohomologyProfile z = random_profile_of_dim(rng, params, dz, "Z");
  const auto [bl, e] = blowup_profiles(x, z, c);

  // E is a P^{c-1}-bundle over Z, so its cohomology is that of Z x P^{c-1}.
  const CohomologyProfile bundle =
      kunneth_product_profile(z, projective_space_profile(corrupt ? c - 2 : c - 1));
  const RingElement lhs = integral_hodge(x) - integral_hodge(z);
  const RingElement rhs = integral_hodge(bl) - integral_hodge(bundle);
  const bool bundle_ok = e.same_cohomology(bundle);
  if (lhs == rhs && bundle_ok) return std::nullopt;
  std::ostringstream os;
  os << "  c = " << c << "\n"
     << "  X = " << describe(x) << "\n"
     << "  Z = " << describe(z) << "\n"
     << "  H_Z(X) - H_Z(Z)  = " << lhs.str() << "\n"
     << "  H_Z(Bl) - H_Z(E) = " << rhs.str() << "\n";
  if (!bundle_ok) os << "  E = " << describe(e) << "\n  Z x P^(c-1) = " << describe(bundle) << "\n";
  return os.str();
}

CaseResult cells_case(std::uint64_t seed, bool corrupt) {
  Rng rng(seed);
  std::vector<unsigned> cells(static_cast<std::size_t>(rng.between(1, 8)));
  for (auto& k : cells) k = static_cast<unsigned>(rng.between(0, 6));
  const LocalizedElement h = h_vir(cell_decomposition_class(cells));

  std::ostringstream os;
  os << "  cells = {";
  for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << cells[k];
  os << "}\n  H_vir = " << h.str() << "\n";

  if (h.denom_exp != 0) return os.str() + "  nonzero denominator\n";
  for (const auto& [m, c] : h.numerator.terms()) {
    if (!m.idem.is_one() || m.main.kind != MainMonomial::Kind::UVT || m.main.u != m.main.v ||
        m.main.t != 0) {
      return os.str() + "  unexpected monomial " + m.str() + "\n";
    }
  }
  std::vector<std::uint64_t> expected(2 * (*std::max_element(cells.begin(), cells.end())) + 1, 0);
  for (unsigned k : cells) ++expected[2 * k];
  if (corrupt) ++expected[2 * cells.front()];
  const auto groups = phi_all(h.numerator);
  for (std::size_t i = 0; i < std::max(groups.size(), expected.size()); ++i) {
    const FinAbGroup got = i < groups.size() ? groups[i] : FinAbGroup{};
    const FinAbGroup want = FinAbGroup::free(i < expected.size() ? expected[i] : 0);
    if (got != want) {
      return os.str() + "  H^" + std::to_string(i) + " = " + got.str() + ", expected " +
             want.str() + "\n";
    }
  }

  // P^n = L^n + P^{n-1}, and P^n has the cells 0..n.
  const auto n = static_cast<unsigned>(rng.between(1, 8));
  const auto pn = VirtualClass::of(projective_space_profile(n));
  const auto pn1 = VirtualClass::of(projective_space_profile(n - 1));
  std::vector<unsigned> pcells(n + 1);
  for (unsigned k = 0; k <= n; ++k) pcells[k] = k;
  if (!cut_and_paste_check(pn, VirtualClass::lefschetz(n), pn1) ||
      !localized_equals(h_vir(pn), h_vir(cell_decomposition_class(pcells)))) {
    return os.str() + "  stratification of P^" + std::to_string(n) + " failed\n";
  }
  return std::nullopt;
}

CaseResult degree_case(std::uint64_t seed, bool corrupt) {
  Rng rng(seed);
  const CohomologyProfile x = random_profile(rng, ProfileParams{}, "X");
  for (unsigned i = 0; i <= 2 * x.dim + 2; ++i) {
    bool ok;
    if (corrupt) {
      const auto d = degree(h_vir(VirtualClass::of(x) * VirtualClass::lefschetz(-static_cast<std::int64_t>(i))));
      ok = !d || *d <= 2 * (static_cast<std::int64_t>(x.dim) - i) - 1;
    } else {
      ok = filtration_degree_check(x, i);
    }
    if (!ok) {
      return "  X = " + describe(x) + "\n  degree bound fails for i = " + std::to_string(i) + "\n";
    }
  }

  const ElementParams ep;
  const RingElement a = random_element(rng, ep);
  const RingElement b = random_element(rng, ep);
  BigInt n = rng.between(1, 9);
  if (rng.chance(1, 2)) n = -n;
  const Degree da = degree(a);
  const Degree db = degree(b);
  std::string failure;
  if (!deg_le(degree(a + b), deg_max(da, db))) failure = "deg(a+b) > max(deg a, deg b)";
  if (degree(n * a) != da) failure = "deg(n*a) != deg(a)";
  if (!deg_le(degree(a * b), deg_sum(da, db))) failure = "deg(a*b) > deg a + deg b";
  if (failure.empty()) return std::nullopt;
  return "  a = " + a.str() + " (deg " + deg_str(da) + ")\n  b = " + b.str() + " (deg " +
         deg_str(db) + ")\n  " + failure + "\n";
}

CaseResult ring_case(std::uint64_t seed, bool corrupt) {
  Rng rng(seed);
  const ElementParams ep;
  const RingElement a = random_element(rng, ep);
  const RingElement b = random_element(rng, ep);
  const RingElement c = random_element(rng, ep);
  std::string failure;
  if ((a * b) * c != a * (b * c)) failure = "associativity";
  else if (a * b != b * a) failure = "commutativity";
  else if (a * (b + c) != a * b + a * c) failure = "distributivity";
  else if (RingElement::one() * a != a) failure = "unit";
  else if (!(a + (-a)).is_zero()) failure = "additive inverse";
  else if (!a.is_zero() && (RingElement::uv_power(1) * a).is_zero()) failure = "uv kills a";
  if (!failure.empty()) {
    return "  a = " + a.str() + "\n  b = " + b.str() + "\n  c = " + c.str() + "\n  " + failure +
           " fails\n";
  }

  const RawMonomial raw = random_raw_monomial(rng, ep);
  const RingElement nf = normal_form(raw);
  const RingElement rewritten = oracle::randomized_rewrite(raw, rng, corrupt);
  if (nf == rewritten) return std::nullopt;
  std::ostringstream os;
  os << "  raw monomial: s=";
  for (const auto& p : raw.s) os << p.str() << ' ';
  os << "r=";
  for (unsigned j : raw.r) os << j << ' ';
  os << "u^" << raw.u << " v^" << raw.v << " t^" << raw.t << " x^" << raw.x << "\n"
     << "  normal form = " << nf.str() << "\n"
     << "  rewritten   = " << rewritten.str() << "\n";
  return os.str();
}

CaseFn suite_fn(const std::string& name) {
  if (name == "kunneth") return kunneth_case;
  if (name == "blowup") return blowup_case;
  if (name == "cells") return cells_case;
  if (name == "degree") return degree_case;
  if (name == "ring") return ring_case;
  throw InputError("unknown verification suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kunneth", "blowup", "cells", "degree", "ring"};
  return names;
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << passed << "/" << cases << " cases passed (seed " << seed
     << ")\n";
  if (first_failure) {
    os << "first counterexample (case " << *first_failure << "):\n" << counterexample;
  }
  return os.str();
}

VerifyReport run_suite(const VerifyOptions& options) {
  const CaseFn fn = suite_fn(options.suite);
  std::vector<CaseResult> results(options.cases);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < options.cases; k = next++) {
      try {
        results[k] = fn(case_seed(options.seed, k), options.corrupt_oracle);
      } catch (const std::exception& e) {
        results[k] = std::string("  exception: ") + e.what() + "\n";
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(options.cases)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  VerifyReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  report.cases = options.cases;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (!results[k]) {
      ++report.passed;
    } else if (!report.first_failure) {
      report.first_failure = k;
      report.counterexample = *results[k];
    }
  }
  return report;
}

}  // namespace zhodge
