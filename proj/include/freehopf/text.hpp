#pragma once

#include <string>
#include <string_view>

#include "freehopf/combination.hpp"

namespace freehopf {

// Text grammar shared by polynomials and tensors:
//
//   poly   := term (("+"|"-") term)*
//   term   := [rational "*"?] word            (a bare rational means rational·1)
//   word   := "1" | letter+
//   tensor := word ("(x)" | "⊗") word ...     (N factors per term)
//
// Printing is canonical: terms in TermOrder, coefficient 1 omitted,
// other coefficients written "c*", "(x)" as tensor separator, "0" for zero.

NCPoly parse_poly(const Alphabet& alphabet, std::string_view text);
Tensor2 parse_tensor2(const Alphabet& alphabet, std::string_view text);

std::string to_string(const NCPoly& p);
std::string to_string(const Tensor2& t);
std::string to_string(const Tensor3& t);

}  // namespace freehopf
