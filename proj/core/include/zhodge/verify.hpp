#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zhodge {

/// Randomized verification suites. Every case draws from its own seed,
/// derived from the run seed and the case index, so a report is identical
/// for a given (suite, seed, cases) regardless of thread count.
///
///   kunneth  H_Z(X)H_Z(Y) = direct product formula = H_Z(Kunneth(X, Y))
///   blowup   H_Z(X) - H_Z(Z) = H_Z(Bl_Z X) - H_Z(E), 2 <= c <= 5
///   cells    cell decompositions give torsion-free classes with the
///            expected Betti numbers; P^n stratifications cut and paste
///   degree   deg H_vir([X] L^-i) <= 2(dim X - i); degree laws in R
///   ring     ring axioms on random triples; rewrite-order confluence
struct VerifyOptions {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  unsigned threads = 0;  ///< 0 = hardware concurrency
  /// Deliberately breaks the suite's reference computation; used to check
  /// that the harness notices.
  bool corrupt_oracle = false;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::optional<std::size_t> first_failure;  ///< case index
  std::string counterexample;

  bool ok() const noexcept { return passed == cases; }
  /// Deterministic multi-line text report.
  std::string str() const;
};

const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite name.
VerifyReport run_suite(const VerifyOptions& options);

}  // namespace zhodge
