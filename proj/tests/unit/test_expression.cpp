#include <gtest/gtest.h>

#include "zhodge/errors.hpp"
#include "zhodge/expression.hpp"

using namespace zhodge;

namespace {

std::optional<VirtualClass> resolve(std::string_view name) {
  if (name == "point") return VirtualClass::point();
  if (name.size() >= 2 && name[0] == 'P') {
    return VirtualClass::of(projective_space_profile(std::stoi(std::string(name.substr(1)))));
  }
  return std::nullopt;
}

VirtualClass parse(std::string_view text) { return parse_virtual_class(text, resolve); }

VirtualClass pn(unsigned n) { return VirtualClass::of(projective_space_profile(n)); }

std::size_t error_column(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST(Expression, Precedence) {
  EXPECT_EQ(parse("P1 + P2 * P3"), pn(1) + pn(2) * pn(3));
  EXPECT_EQ(parse("(P1 + P2) * P3"), (pn(1) + pn(2)) * pn(3));
  EXPECT_EQ(parse("2*L^2 - 3"), 2 * VirtualClass::lefschetz(2) - VirtualClass::integer(3));
  EXPECT_EQ(parse("-P1"), -pn(1));
  EXPECT_EQ(parse("P1^3"), pn(1) * pn(1) * pn(1));
}

TEST(Expression, SpecExample) {
  const auto e = VirtualClass::of(projective_space_profile(0));
  EXPECT_EQ(parse("(P2 - L^2) * P0 + 3*L^-1"),
            (pn(2) - VirtualClass::lefschetz(2)) * e + 3 * VirtualClass::lefschetz(-1));
}

TEST(Expression, NormalizationIsDeterministic) {
  EXPECT_EQ(parse("P1*P2 + P2*P1").str(), parse("2*P1*P2").str());
  EXPECT_EQ(parse("L^-1 * L").str(), "1");
  EXPECT_EQ(parse("point"), VirtualClass::point());
}

TEST(Expression, Errors) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("P1 +"), ParseError);
  EXPECT_THROW(parse("P1^-1"), ParseError);
  EXPECT_THROW(parse("(P1"), ParseError);
  EXPECT_THROW(parse("P1 $"), ParseError);
  EXPECT_EQ(error_column("P1 + Q7"), 6u);
}
