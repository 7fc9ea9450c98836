#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chainreg/chain.hpp"

namespace chainreg {

/// monomial := "1" | factor ("*" factor)*, factor := "x" INT ("^" INT)?.
/// Whitespace is ignored and repeated variables multiply. The ambient width
/// defaults to the largest index. Errors are ParseError with line `line` and
/// the 1-based column inside `text` plus `column_offset`.
Monomial parse_monomial(std::string_view text, std::optional<int> ambient = std::nullopt,
                        std::size_t line = 1, std::size_t column_offset = 0);

/// Comma-separated monomials, or "0" for the zero ideal.
MonomialIdeal parse_ideal(std::string_view text, int ambient, std::size_t line = 1,
                          std::size_t column_offset = 0);

/// A chain file, one "key: value" per line, '#' starting a comment:
///
///   index: 3
///   symmetry: inc            (optional, inc or sym)
///   gens: x1^2, x2^2*x3      (repeatable; lists concatenate)
///   head 1: 0                (optional, all of 1..index-1 or none)
///   transform: msat 2        (optional, repeatable: saturation | msat M | colon E)
IncChain parse_chain(std::istream& in);
IncChain load_chain(const std::string& path);

/// The command-line front end. Exit codes: 0 success, 1 a check or
/// computation failed, 2 usage error, 3 resource guard hit (partial output
/// already written).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainreg
