#pragma once

#include <optional>
#include <string>

#include "ramal/algebra.hpp"
#include "ramal/decide.hpp"

namespace ramal {

/// Exactly one of the two members is set.
struct ParsedInput {
  std::optional<FiniteAlgebra> algebra;
  std::optional<ResidueUnarySystem> residue;
};

/// Grammar (UTF-8, whitespace-tokenized):
///   carrier <n>            then per op:  op <name> <arity>  and n^arity
///                          whitespace-separated table entries, row-major
///   modulus <m>            then per op:  shifts <c0> ... <c_{m-1}>
/// The leading keyword selects the form. The result is validated.
ParsedInput parse_input_text(const std::string& text,
                           const std::string& origin);

ParsedInput parse_input_file(const std::string& path);

std::string print_algebra_file(const FiniteAlgebra& alg);

std::string print_residue_file(const ResidueUnarySystem& sys);

}  // namespace ramal
