#include <gtest/gtest.h>

#include "zhodge/errors.hpp"
#include "zhodge/profile_io.hpp"
#include "zhodge/random.hpp"

using namespace zhodge;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_profile(text, "t.json");
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST(ProfileIo, LoadsCorpusFile) {
  const auto e = load_profile_file(ZHODGE_TEST_DATA "/corpus/E.json");
  EXPECT_EQ(e.name, "E");
  EXPECT_EQ(e.dim, 2u);
  EXPECT_EQ(e.cohomology(2).str(), "Z^10 + Z/2");
  EXPECT_EQ(e.cohomology(3).str(), "Z/2");
}

TEST(ProfileIo, MissingTorsionMeansTorsionFree) {
  const auto x = parse_profile(R"({"name": "A", "dim": 1, "hodge": [[0,0,1],[1,1,1]]})");
  EXPECT_TRUE(x.torsion.empty());
}

TEST(ProfileIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("{\n\"name\": \"A\",\n\"dim\": 1,\n\"hodge\": [],\n\"colour\": 1\n}"), 5);
  EXPECT_EQ(parse_error_line("{\n\"name\": \"A\",\n\"dim\": 1,\n\"hodge\": [],\n\"torsion\": {\"x\": []}\n}"), 5);
  EXPECT_EQ(parse_error_line("{\n\"name\": \"A\",\n\"dim\": 1,\n\"hodge\": [[0, 0, -1]]\n}"), 4);
  EXPECT_EQ(parse_error_line("{\n\"name\": \"A\",\n\"dim\": 1,\n\"hodge\": [[0, 0]]\n}"), 4);
  EXPECT_EQ(parse_error_line("{\n\"name\": \"A\",\n\"dim\": 1,\n\"hodge\": [],\n\"torsion\": {\"2\": [[4, 1, 1]]}\n}"), 5);
  EXPECT_GT(parse_error_line("{\n\"name\": \"A\",\n\"dim\": \n"), 0);
  EXPECT_EQ(parse_error_line("{\"dim\": 1, \"hodge\": []}"), 1);
  EXPECT_THROW(load_profile_file(ZHODGE_TEST_DATA "/bad/bad_torsion_key.json"), ParseError);
  EXPECT_THROW(load_profile_file(ZHODGE_TEST_DATA "/nonexistent.json"), InputError);
}

TEST(ProfileIo, ValidationFailuresAreInputErrors) {
  EXPECT_THROW(parse_profile(R"({"name": "A", "dim": 1, "hodge": [[2,0,1]]})"), InputError);
  EXPECT_THROW(parse_profile(R"({"name": "A", "dim": 1, "hodge": [], "torsion": {"1": [[2,1,1]]}})"),
               InputError);
}

TEST(ProfileIoProperty, JsonRoundTrip) {
  Rng rng(41);
  ProfileParams params;
  for (int n = 0; n < 300; ++n) {
    const auto x = random_profile(rng, params, "R" + std::to_string(n));
    const auto y = parse_profile(profile_to_json(x));
    EXPECT_EQ(y.name, x.name);
    EXPECT_TRUE(y.same_cohomology(x));
  }
}
