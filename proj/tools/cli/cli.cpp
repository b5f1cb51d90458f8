#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zhodge/errors.hpp"
#include "zhodge/expression.hpp"
#include "zhodge/profile_io.hpp"
#include "zhodge/verify.hpp"

namespace zhodge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

ProfileLibrary::ProfileLibrary() {
  profiles_.emplace("point", point_profile());
  for (unsigned n = 0; n <= kMaxBuiltinProjective; ++n) {
    auto p = projective_space_profile(n);
    profiles_.emplace(p.name, std::move(p));
  }
}

void ProfileLibrary::add(CohomologyProfile profile) {
  if (profile.name == "L") throw InputError("profile name 'L' is reserved for the Lefschetz class");
  if (profiles_.count(profile.name)) {
    throw InputError("duplicate profile name '" + profile.name + "'");
  }
  std::string name = profile.name;
  profiles_.emplace(std::move(name), std::move(profile));
}

std::vector<CohomologyProfile> ProfileLibrary::load(const std::string& path) {
  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path().string());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<CohomologyProfile> loaded;
  for (const auto& f : files) {
    auto profile = load_profile_file(f);
    add(profile);
    loaded.push_back(std::move(profile));
  }
  return loaded;
}

std::optional<CohomologyProfile> ProfileLibrary::find(std::string_view name) const {
  auto it = profiles_.find(name);
  if (it == profiles_.end()) return std::nullopt;
  return it->second;
}

std::optional<VirtualClass> ProfileLibrary::resolve(std::string_view name) const {
  if (name == "point") return VirtualClass::point();
  auto p = find(name);
  if (!p) return std::nullopt;
  return VirtualClass::of(*p);
}

namespace {

struct Context {
  std::vector<std::string> profile_paths;
  bool strict = false;
  std::string format = "text";
  ProfileLibrary library;
  std::ostream& out;
  std::ostream& err;

  bool json_output() const { return format == "json"; }

  void lint(const CohomologyProfile& p) {
    const auto warnings = realizability_lints(p);
    if (warnings.empty()) return;
    if (strict) throw InputError("realizability check failed: " + warnings.front());
    for (const auto& w : warnings) err << "warning: " << w << "\n";
  }

  void load_library() {
    for (const auto& path : profile_paths) {
      for (const auto& p : library.load(path)) lint(p);
    }
  }

  // A path to a profile file, or the name of a loaded/built-in profile.
  CohomologyProfile profile_arg(const std::string& arg) {
    if (fs::is_regular_file(arg)) {
      auto p = load_profile_file(arg);
      lint(p);
      return p;
    }
    if (auto p = library.find(arg)) return *p;
    throw InputError("'" + arg + "' is neither a profile file nor a known profile name");
  }

  VirtualClass expression_arg(const std::string& text) {
    return parse_virtual_class(text, [this](std::string_view n) { return library.resolve(n); });
  }

  void emit(const json& doc) { out << doc.dump(2) << "\n"; }
};

std::string degree_text(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

json degree_json(const Degree& d) { return d ? json(*d) : json("-inf"); }

json groups_json(const std::vector<FinAbGroup>& groups) {
  json arr = json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) arr.push_back({{"degree", i}, {"group", groups[i].str()}});
  return arr;
}

json profile_json(const CohomologyProfile& p) { return json::parse(profile_to_json(p)); }

int cmd_hz(Context& ctx, const std::string& target) {
  if (fs::is_regular_file(target) || ctx.library.find(target)) {
    const auto p = ctx.profile_arg(target);
    const RingElement hz = integral_hodge(p);
    if (ctx.json_output()) {
      ctx.emit({{"profile", p.name}, {"hz", hz.str()}, {"torsion_poincare", torsion_poincare(p).str()}});
    } else {
      ctx.out << hz.str() << "\n";
    }
    return kOk;
  }
  const VirtualClass cls = ctx.expression_arg(target);
  const LocalizedElement h = h_vir(cls);
  if (ctx.json_output()) {
    ctx.emit({{"expression", cls.str()},
              {"numerator", h.numerator.str()},
              {"denom_exp", h.denom_exp},
              {"hz", h.str()}});
  } else {
    ctx.out << h.str() << "\n";
  }
  return kOk;
}

int cmd_product(Context& ctx, const std::string& a, const std::string& b) {
  const auto x = ctx.profile_arg(a);
  const auto y = ctx.profile_arg(b);
  const auto prod = kunneth_product_profile(x, y);
  const RingElement via_ring = integral_hodge(x) * integral_hodge(y);
  const RingElement direct = product_hz_direct(x, y);
  const RingElement via_kunneth = integral_hodge(prod);
  const bool ok = via_ring == direct && direct == via_kunneth;
  std::vector<FinAbGroup> groups;
  for (unsigned i = 0; i <= 2 * prod.dim; ++i) groups.push_back(prod.cohomology(i));
  if (ctx.json_output()) {
    ctx.emit({{"profile", profile_json(prod)},
              {"cohomology", groups_json(groups)},
              {"hz", via_kunneth.str()},
              {"hz_product", via_ring.str()},
              {"hz_direct", direct.str()},
              {"multiplicative", ok}});
  } else {
    ctx.out << describe(prod) << "\n";
    for (std::size_t i = 0; i < groups.size(); ++i) ctx.out << "H^" << i << " = " << groups[i].str() << "\n";
    ctx.out << "H_Z = " << via_kunneth.str() << "\n";
    ctx.out << "multiplicativity: " << (ok ? "ok" : "FAILED") << "\n";
    if (!ok) {
      ctx.out << "  H_Z(X)H_Z(Y) = " << via_ring.str() << "\n"
              << "  direct       = " << direct.str() << "\n";
    }
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_blowup(Context& ctx, const std::string& xa, const std::string& za, unsigned c) {
  const auto x = ctx.profile_arg(xa);
  const auto z = ctx.profile_arg(za);
  const auto [bl, e] = blowup_profiles(x, z, c);
  const RingElement lhs = integral_hodge(x) - integral_hodge(z);
  const RingElement rhs = integral_hodge(bl) - integral_hodge(e);
  const bool ok = lhs == rhs;
  if (ctx.json_output()) {
    ctx.emit({{"blowup", profile_json(bl)},
              {"exceptional", profile_json(e)},
              {"hz_blowup", integral_hodge(bl).str()},
              {"hz_exceptional", integral_hodge(e).str()},
              {"lhs", lhs.str()},
              {"rhs", rhs.str()},
              {"identity", ok}});
  } else {
    ctx.out << "Bl = " << describe(bl) << "\n"
            << "E  = " << describe(e) << "\n"
            << "H_Z(Bl) = " << integral_hodge(bl).str() << "\n"
            << "H_Z(E)  = " << integral_hodge(e).str() << "\n"
            << "H_Z(X) - H_Z(Z)  = " << lhs.str() << "\n"
            << "H_Z(Bl) - H_Z(E) = " << rhs.str() << "\n"
            << "blow-up identity: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_reconstruct(Context& ctx, const std::string& expr, std::optional<unsigned> degree_opt) {
  const LocalizedElement h = h_vir(ctx.expression_arg(expr));
  if (h.denom_exp != 0) {
    throw DomainError("not in R+: H_vir has denominator (u*v)^" + std::to_string(h.denom_exp));
  }
  if (!is_in_r_plus(h.numerator)) throw DomainError("not in R+: " + h.numerator.str());
  std::vector<std::pair<unsigned, FinAbGroup>> rows;
  if (degree_opt) {
    rows.emplace_back(*degree_opt, phi(h.numerator, *degree_opt));
  } else {
    const auto all = phi_all(h.numerator);
    for (unsigned i = 0; i < all.size(); ++i) rows.emplace_back(i, all[i]);
  }
  if (ctx.json_output()) {
    json arr = json::array();
    for (const auto& [i, g] : rows) arr.push_back({{"degree", i}, {"group", g.str()}});
    ctx.emit({{"hz", h.str()}, {"cohomology", arr}});
  } else {
    for (const auto& [i, g] : rows) ctx.out << "H^" << i << " = " << g.str() << "\n";
  }
  return kOk;
}

int cmd_cells(Context& ctx, const std::vector<unsigned>& cells) {
  const VirtualClass cls = cell_decomposition_class(cells);
  const LocalizedElement h = h_vir(cls);
  const auto groups = h.numerator.is_zero() ? std::vector<FinAbGroup>{} : phi_all(h.numerator);
  if (ctx.json_output()) {
    ctx.emit({{"class", cls.str()}, {"hz", h.str()}, {"cohomology", groups_json(groups)}});
  } else {
    ctx.out << "class = " << cls.str() << "\n" << "H_vir = " << h.str() << "\n";
    for (std::size_t i = 0; i < groups.size(); ++i) ctx.out << "H^" << i << " = " << groups[i].str() << "\n";
  }
  return kOk;
}

int cmd_degree(Context& ctx, const std::string& target, bool filtration) {
  if (!filtration) {
    const LocalizedElement h = h_vir(ctx.expression_arg(target));
    const Degree d = degree(h);
    if (ctx.json_output()) {
      ctx.emit({{"hz", h.str()}, {"degree", degree_json(d)}});
    } else {
      ctx.out << "deg = " << degree_text(d) << "\n";
    }
    return kOk;
  }
  const auto p = ctx.profile_arg(target);
  bool all_ok = true;
  json rows = json::array();
  for (unsigned i = 0; i <= 2 * p.dim + 2; ++i) {
    const auto d = degree(h_vir(VirtualClass::of(p) * VirtualClass::lefschetz(-static_cast<std::int64_t>(i))));
    const std::int64_t bound = 2 * (static_cast<std::int64_t>(p.dim) - static_cast<std::int64_t>(i));
    const bool ok = filtration_degree_check(p, i);
    all_ok = all_ok && ok;
    if (ctx.json_output()) {
      rows.push_back({{"i", i}, {"degree", degree_json(d)}, {"bound", bound}, {"ok", ok}});
    } else {
      ctx.out << "i=" << i << ": deg = " << degree_text(d) << " <= " << bound << " "
              << (ok ? "ok" : "FAILED") << "\n";
    }
  }
  if (ctx.json_output()) ctx.emit({{"profile", p.name}, {"filtration", rows}, {"ok", all_ok}});
  return all_ok ? kOk : kVerificationFailed;
}

int cmd_verify(Context& ctx, const VerifyOptions& options) {
  const VerifyReport report = run_suite(options);
  if (ctx.json_output()) {
    json doc{{"suite", report.suite},
             {"seed", report.seed},
             {"cases", report.cases},
             {"passed", report.passed},
             {"ok", report.ok()}};
    if (report.first_failure) {
      doc["first_failure"] = *report.first_failure;
      doc["counterexample"] = report.counterexample;
    }
    ctx.emit(doc);
  } else {
    ctx.out << report.str();
  }
  return report.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{{}, false, "text", {}, out, err};

  CLI::App app{"Integral Hodge functions, their ring, and verification suites", "zhodge"};
  app.require_subcommand(1);
  app.add_option("--profiles", ctx.profile_paths, "Profile JSON file or directory (repeatable)");
  app.add_flag("--strict", ctx.strict, "Treat realizability warnings as errors");
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string target;
  std::string second;
  unsigned codim = 2;
  std::optional<unsigned> degree_opt;
  bool all = false;
  bool filtration = false;
  std::vector<unsigned> cells;
  VerifyOptions verify;

  auto* hz = app.add_subcommand("hz", "Evaluate H_Z of a profile (file or name) or H_vir of an expression");
  hz->add_option("target", target, "Profile file, profile name, or class expression")->required();

  auto* product = app.add_subcommand("product", "Kunneth product of two profiles and its H_Z");
  product->add_option("x", target, "First profile (file or name)")->required();
  product->add_option("y", second, "Second profile (file or name)")->required();

  auto* blowup = app.add_subcommand("blowup", "Blow up X along Z and check the blow-up identity");
  blowup->add_option("x", target, "Ambient profile (file or name)")->required();
  blowup->add_option("z", second, "Center profile (file or name)")->required();
  blowup->add_option("--codim,-c", codim, "Codimension of Z in X")->check(CLI::Range(2u, 1000u));

  auto* reconstruct = app.add_subcommand("reconstruct", "Read cohomology groups back from H_vir");
  reconstruct->add_option("expr", target, "Class expression")->required();
  auto* deg_opt = reconstruct->add_option("--degree", degree_opt, "Single cohomological degree");
  reconstruct->add_flag("--all", all, "All degrees (default)")->excludes(deg_opt);

  auto* cells_cmd = app.add_subcommand("cells", "H_vir of a cell decomposition with the given cell dimensions");
  cells_cmd->add_option("dims", cells, "Cell dimensions");

  auto* degree_cmd = app.add_subcommand("degree", "Degree of H_vir of an expression");
  degree_cmd->add_option("target", target, "Class expression (or profile with --filtration)")->required();
  degree_cmd->add_flag("--filtration", filtration,
                       "Check deg H_vir([X] L^-i) <= 2(dim X - i) for i = 0..2 dim + 2");

  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized verification suite");
  verify_cmd->add_option("suite", verify.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--cases", verify.cases, "Number of cases");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_flag("--inject-fault", verify.corrupt_oracle,
                       "Corrupt the suite's reference computation (harness self-test)")
      ->group("");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    ctx.load_library();
    if (hz->parsed()) return cmd_hz(ctx, target);
    if (product->parsed()) return cmd_product(ctx, target, second);
    if (blowup->parsed()) return cmd_blowup(ctx, target, second, codim);
    if (reconstruct->parsed()) return cmd_reconstruct(ctx, target, degree_opt);
    if (cells_cmd->parsed()) return cmd_cells(ctx, cells);
    if (degree_cmd->parsed()) return cmd_degree(ctx, target, filtration);
    if (verify_cmd->parsed()) return cmd_verify(ctx, verify);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace zhodge::cli
