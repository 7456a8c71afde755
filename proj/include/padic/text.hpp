#pragma once

#include <string>
#include <string_view>

#include "padic/padic_number.hpp"

namespace padic {

/// Renders x as
///   "0"                                  exact zero
///   "0 (mod 5^N)"                        zero known modulo 5^N
///   "d0 d1 ... * 5^v (mod 5^N)"          capped value, digits from p^v upward
///   "d0 d1 ... * 5^v"                    exact finite expansion
///   "-d0 d1 ... * 5^v"                   negated exact finite expansion
///   "a/b * 5^v"                          any other exact value (a/b a unit)
/// Digits are written in decimal and separated by single spaces.
std::string to_string(const PadicNumber& x);

/// Parses every form produced by to_string, plus arithmetic expressions over
/// integers and the symbol p: "p^2", "3*p^-1 + 2", "1/(1-p)", "-p^4 (mod p^9)".
/// Expressions evaluate exactly; a trailing "(mod B^N)" caps the result at
/// absolute precision N. The base B may be written as p or as the prime.
/// Throws ParseError on malformed text.
PadicNumber parse_padic(std::string_view text, Prime p);

}  // namespace padic
