#include "monocheck/cli/parse.hpp"

#include <cctype>

namespace monocheck::cli {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

constexpr unsigned long kMaxExponent = 1u << 20;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    IntPoly p = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  IntPoly expr() {
    IntPoly acc = term();
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      IntPoly rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  IntPoly term() {
    IntPoly acc = unary();
    while (true) {
      skip_space();
      if (peek() == '/') throw ParseError("division is not supported (non-integer coefficient)", pos_);
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  IntPoly unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  IntPoly power() {
    IntPoly base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("exponent must be a positive integer", start);
    const Integer e = digits();
    if (e == 0 || e >= kMaxExponent) throw ParseError("exponent must be a positive integer below 2^20", start);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  IntPoly primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_++;
      IntPoly inner = expr();
      skip_space();
      if (peek() != ')') throw ParseError("unbalanced parenthesis opened", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(digits());
    if (c == 'x') {
      ++pos_;
      return IntPoly::monomial(1, 1);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError(std::string("unknown variable '") + c + "'; only x is allowed", pos_);
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == 'e' || peek() == 'E') throw ParseError("non-integer coefficient", start);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Integer parse_signed(std::string_view t, std::size_t offset) {
  std::size_t i = 0;
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  std::size_t j = t.size();
  while (j > i && std::isspace(static_cast<unsigned char>(t[j - 1]))) --j;
  std::string_view core = t.substr(i, j - i);
  std::size_t k = (!core.empty() && (core[0] == '-' || core[0] == '+')) ? 1 : 0;
  if (k == core.size()) throw ParseError("expected an integer", offset + i);
  for (std::size_t n = k; n < core.size(); ++n)
    if (!std::isdigit(static_cast<unsigned char>(core[n]))) throw ParseError("expected an integer", offset + i + n);
  return Integer(std::string(core[0] == '+' ? core.substr(1) : core));
}

}  // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::vector<Integer> parse_int_range(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(start, comma - start);
    const std::size_t dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_signed(part, start));
    } else {
      const Integer lo = parse_signed(part.substr(0, dots), start);
      const Integer hi = parse_signed(part.substr(dots + 2), start + dots + 2);
      if (hi < lo) throw ParseError("empty range", start);
      if (hi - lo > 10000000) throw ParseError("range too large", start);
      for (Integer v = lo; v <= hi; ++v) out.push_back(v);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace monocheck::cli
