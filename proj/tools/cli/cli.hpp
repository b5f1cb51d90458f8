#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "zhodge/hodge.hpp"
#include "zhodge/motivic.hpp"

namespace zhodge::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kDomainError = 3,
};

/// Named profiles available to commands: built-ins (point, P0..P16) plus
/// anything loaded from profile files. "L" is reserved for the Lefschetz
/// class by the expression grammar.
class ProfileLibrary {
 public:
  static constexpr unsigned kMaxBuiltinProjective = 16;

  ProfileLibrary();

  /// Throws InputError if the name is taken (built-ins cannot be overridden).
  void add(CohomologyProfile profile);

  /// Loads a profile file, or every *.json in a directory (sorted by name).
  /// Returns the loaded profiles.
  std::vector<CohomologyProfile> load(const std::string& path);

  std::optional<CohomologyProfile> find(std::string_view name) const;
  /// Class for an expression atom; "point" is the unit class.
  std::optional<VirtualClass> resolve(std::string_view name) const;

  const std::map<std::string, CohomologyProfile, std::less<>>& profiles() const { return profiles_; }

 private:
  std::map<std::string, CohomologyProfile, std::less<>> profiles_;
};

/// Runs the command line `args` (without the program name). Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zhodge::cli
