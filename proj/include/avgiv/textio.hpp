#pragma once

#include "avgiv/exact.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace avgiv {

/// Malformed input text (bad syntax or a zero denominator).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses the exact-number grammar (whitespace ignored):
///   number    := rat | [rat ("+"|"-")] root-term
///   root-term := [rat "*"] "sqrt(" uint ")"
///   rat       := ["-"] uint ["/" uint]
/// Examples: "2/3", "sqrt(2)", "1/2*sqrt(2)", "1+1/3*sqrt(5)", "1/2-sqrt(3)".
ExactReal parse_number(std::string_view text);

/// Canonical text for a value; round-trips through parse_number.
std::string format_number(const ExactReal& x);

/// Comma-separated list of numbers; at least one entry required.
std::vector<ExactReal> parse_number_list(std::string_view text);

}  // namespace avgiv
