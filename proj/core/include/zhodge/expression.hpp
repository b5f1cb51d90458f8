#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "zhodge/motivic.hpp"

namespace zhodge {

/// Maps a profile name appearing in an expression to its class.
using NameResolver = std::function<std::optional<VirtualClass>(std::string_view)>;

/// Parses virtual-class expressions such as "(P2 - L^2) * E + 3*L^-1".
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | name | 'L' | '(' expr ')'
///
/// "L" is the Lefschetz class and is the only base allowed a negative
/// exponent. Names are [A-Za-z_][A-Za-z0-9_]*. Throws ParseError (with the
/// 1-based column) on syntax errors and unknown names.
VirtualClass parse_virtual_class(std::string_view text, const NameResolver& resolve);

}  // namespace zhodge
