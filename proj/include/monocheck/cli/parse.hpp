#pragma once

#include "monocheck/zpoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monocheck::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Zero-based offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Integer polynomial in x: literals, x, ^ with positive integer exponents,
/// *, +, -, and parentheses.
IntPoly parse_poly(std::string_view text);

/// "a..b", "a" or a comma list of those, expanded in order.
std::vector<Integer> parse_int_range(std::string_view text);

}  // namespace monocheck::cli
