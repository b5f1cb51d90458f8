#include "zhodge/abgroup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zhodge/errors.hpp"

namespace zhodge {

namespace {

void canonicalize(FinAbGroup::TorsionMap& torsion) {
  for (auto it = torsion.begin(); it != torsion.end();) {
    auto& exps = it->second;
    if (std::find(exps.begin(), exps.end(), 0u) != exps.end()) {
      throw InputError("torsion exponent must be >= 1 (prime " + it->first.str() + ")");
    }
    if (exps.empty()) {
      it = torsion.erase(it);
      continue;
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
    ++it;
  }
}

void append_copies(FinAbGroup::Exponents& dst, const FinAbGroup::Exponents& src,
                   std::uint64_t copies) {
  dst.reserve(dst.size() + src.size() * copies);
  for (std::uint64_t c = 0; c < copies; ++c) dst.insert(dst.end(), src.begin(), src.end());
}

FinAbGroup::TorsionMap tensor_torsion(const FinAbGroup::TorsionMap& a,
                                      const FinAbGroup::TorsionMap& b) {
  FinAbGroup::TorsionMap out;
  for (const auto& [p, ea] : a) {
    auto it = b.find(p);
    if (it == b.end()) continue;
    auto& dst = out[p];
    for (unsigned k : ea) {
      for (unsigned k2 : it->second) dst.push_back(std::min(k, k2));
    }
  }
  return out;
}

}  // namespace

FinAbGroup::FinAbGroup(std::uint64_t free_rank, TorsionMap torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  canonicalize(torsion_);
}

FinAbGroup FinAbGroup::cyclic(const Prime& p, unsigned k, std::uint64_t multiplicity) {
  if (multiplicity == 0) return {};
  return FinAbGroup(0, {{p, Exponents(multiplicity, k)}});
}

std::string FinAbGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank_ > 0) {
    sep();
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
  }
  for (const auto& [p, exps] : torsion_) {
    for (unsigned k : exps) {
      sep();
      os << "Z/" << p.str();
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  auto torsion = a.torsion();
  for (const auto& [p, exps] : b.torsion()) {
    auto& dst = torsion[p];
    dst.insert(dst.end(), exps.begin(), exps.end());
  }
  return FinAbGroup(a.free_rank() + b.free_rank(), std::move(torsion));
}

FinAbGroup direct_power(const FinAbGroup& a, std::uint64_t copies) {
  FinAbGroup::TorsionMap torsion;
  if (copies > 0) {
    for (const auto& [p, exps] : a.torsion()) append_copies(torsion[p], exps, copies);
  }
  return FinAbGroup(a.free_rank() * copies, std::move(torsion));
}

FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b) {
  auto torsion = tensor_torsion(a.torsion(), b.torsion());
  for (const auto& [p, exps] : a.torsion()) append_copies(torsion[p], exps, b.free_rank());
  for (const auto& [p, exps] : b.torsion()) append_copies(torsion[p], exps, a.free_rank());
  return FinAbGroup(a.free_rank() * b.free_rank(), std::move(torsion));
}

FinAbGroup tor(const FinAbGroup& a, const FinAbGroup& b) {
  return FinAbGroup(0, tensor_torsion(a.torsion(), b.torsion()));
}

std::uint64_t a_invariant(const FinAbGroup& a, const Prime& p, unsigned j) {
  auto it = a.torsion().find(p);
  if (it == a.torsion().end()) return 0;
  // Exponents are sorted descending.
  const auto& exps = it->second;
  return static_cast<std::uint64_t>(
      std::find_if(exps.begin(), exps.end(), [j](unsigned k) { return k <= j; }) -
      exps.begin());
}

InvariantTable invariant_table(const FinAbGroup& a) {
  InvariantTable table;
  for (const auto& [p, exps] : a.torsion()) {
    for (unsigned j = 0; j < exps.front(); ++j) {
      table[{p, j}] = static_cast<std::int64_t>(a_invariant(a, p, j));
    }
  }
  return table;
}

FinAbGroup from_invariants(const InvariantTable& table) {
  std::map<Prime, std::map<unsigned, std::int64_t>> by_prime;
  for (const auto& [key, value] : table) {
    if (value < 0) {
      throw DomainError("negative invariant a_{" + key.first.str() + "," +
                        std::to_string(key.second) + "}");
    }
    if (value > 0) by_prime[key.first][key.second] = value;
  }
  FinAbGroup::TorsionMap torsion;
  for (const auto& [p, row] : by_prime) {
    const unsigned top = row.rbegin()->first;
    auto at = [&row](unsigned j) {
      auto it = row.find(j);
      return it == row.end() ? std::int64_t{0} : it->second;
    };
    auto& exps = torsion[p];
    // Z/p^j occurs a_{p,j-1} - a_{p,j} times, for j = 1 .. top+1.
    for (unsigned j = 1; j <= top + 1; ++j) {
      const std::int64_t diff = at(j - 1) - at(j);
      if (diff < 0) {
        throw DomainError("invariants for prime " + p.str() + " increase at j=" +
                          std::to_string(j));
      }
      exps.insert(exps.end(), static_cast<std::size_t>(diff), j);
    }
  }
  return FinAbGroup(0, std::move(torsion));
}

}  // namespace zhodge
