#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "zhodge/errors.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zhodge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kCorpus = ZHODGE_TEST_DATA "/corpus";

}  // namespace

TEST(Cli, HzOfProfileFile) {
  const auto r = run({"hz", kCorpus + "/E.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + 10*u*v + u^2*v^2 + s_2*r_0*t^2*x - s_2*r_0*t^3*x\n");
}

TEST(Cli, HzOfBuiltinsAndExpressions) {
  EXPECT_EQ(run({"hz", "point"}).out, "1\n");
  EXPECT_EQ(run({"hz", "P1*P1 - P1"}).out, "u*v + u^2*v^2\n");
  EXPECT_EQ(run({"hz", "L^-1"}).out, "(1)/(u*v)\n");
}

TEST(Cli, MalformedProfileIsAnInputError) {
  const auto r = run({"hz", ZHODGE_TEST_DATA "/bad/bad_torsion_key.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad_torsion_key.json:6:"), std::string::npos) << r.err;
}

TEST(Cli, Reconstruct) {
  EXPECT_EQ(run({"--profiles", kCorpus, "reconstruct", "E", "--degree", "2"}).out, "H^2 = Z^10 + Z/2\n");
  EXPECT_EQ(run({"reconstruct", "point", "--all"}).out, "H^0 = Z\n");
  const auto r = run({"reconstruct", "L^-1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("not in R+"), std::string::npos);
  EXPECT_EQ(run({"reconstruct", "P1 - P2"}).code, 3);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "kunneth", "--cases", "200", "--seed", "7"}).code, 0);
  EXPECT_EQ(run({"verify", "blowup", "--cases", "100"}).code, 0);
  const auto bad = run({"verify", "ring", "--cases", "30", "--inject-fault"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("first counterexample"), std::string::npos);
  EXPECT_EQ(run({"verify", "cells", "--seed", "5"}).out, run({"verify", "cells", "--seed", "5"}).out);
  EXPECT_EQ(run({"verify", "nope"}).code, 2);
}

TEST(Cli, ProductAndBlowup) {
  const auto p = run({"--profiles", kCorpus, "product", "T0", "T0"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("H_Z = 1 - 2*s_2*r_0*t^3*x - s_2*r_0*t^5*x + s_2*r_0*t^6*x"), std::string::npos);
  const auto b = run({"blowup", "P2", "point", "--codim", "2"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("H_Z(Bl) - H_Z(E) = u*v + u^2*v^2"), std::string::npos);
  EXPECT_EQ(run({"blowup", "P3", "point", "--codim", "2"}).code, 2);
}

TEST(Cli, CellsAndDegree) {
  const auto c = run({"cells", "0", "1", "2", "2", "3", "4"});
  EXPECT_NE(c.out.find("H_vir = 1 + u*v + 2*u^2*v^2 + u^3*v^3 + u^4*v^4"), std::string::npos);
  EXPECT_EQ(run({"degree", "P2*L^-3"}).out, "deg = -2\n");
  EXPECT_EQ(run({"degree", "0"}).out, "deg = -inf\n");
  EXPECT_EQ(run({"--profiles", kCorpus, "degree", "--filtration", "W3"}).code, 0);
}

TEST(Cli, StrictModeAndLibrary) {
  EXPECT_EQ(run({"--profiles", kCorpus, "hz", "E"}).code, 0);
  EXPECT_EQ(run({"--profiles", kCorpus, "--strict", "hz", "E"}).code, 2);  // T0 in the corpus fails lints
  EXPECT_EQ(run({"--strict", "hz", kCorpus + "/E.json"}).code, 0);
  EXPECT_EQ(run({"--profiles", kCorpus, "--profiles", kCorpus, "hz", "E"}).code, 2);
  EXPECT_EQ(run({"hz", "Q"}).code, 2);
}

TEST(Cli, JsonFormat) {
  const auto r = run({"--format", "json", "--profiles", kCorpus, "reconstruct", "E", "--degree", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"group\": \"Z^10 + Z/2\""), std::string::npos) << r.out;
  EXPECT_EQ(run({"--format", "xml", "hz", "point"}).code, 2);
}

TEST(Cli, ProfileLibraryGuardsBuiltins) {
  zhodge::cli::ProfileLibrary lib;
  EXPECT_TRUE(lib.find("P16").has_value());
  EXPECT_FALSE(lib.find("P17").has_value());
  EXPECT_THROW(lib.add(zhodge::projective_space_profile(2)), zhodge::InputError);
  EXPECT_THROW(lib.add(zhodge::CohomologyProfile::make("L", 0, {{{0, 0}, 1}})), zhodge::InputError);
}
