#include "avgiv/textio.hpp"

#include <cctype>

namespace avgiv {

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view text) {
    stripped_.reserve(text.size());
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) stripped_.push_back(c);
  }

  bool done() const { return pos_ >= stripped_.size(); }
  char peek() const { return done() ? '\0' : stripped_[pos_]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool consume_word(std::string_view w) {
    if (stripped_.compare(pos_, w.size(), w) != 0) return false;
    pos_ += w.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("expected " + expected + " at position " + std::to_string(pos_) +
                     " in \"" + stripped_ + "\"");
  }

  Int parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(stripped_[pos_++]);
    return Int(digits);
  }

  // rat := ["-"] uint ["/" uint]
  Rational parse_rat() {
    const bool negative = consume('-');
    Int num = parse_uint();
    Int den = 1;
    if (consume('/')) {
      den = parse_uint();
      if (den == 0) throw ParseError("zero denominator in \"" + stripped_ + "\"");
    }
    if (negative) num = -num;
    return make_rational(std::move(num), std::move(den));
  }

  // "sqrt(" uint ")" with the leading word already known to be present.
  Int parse_root() {
    if (!consume_word("sqrt(")) fail("sqrt(");
    Int rad = parse_uint();
    if (!consume(')')) fail("')'");
    return rad;
  }

  bool at_root() const { return stripped_.compare(pos_, 5, "sqrt(") == 0; }

private:
  std::string stripped_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactReal parse_number(std::string_view text) {
  Scanner s(text);
  if (s.done()) s.fail("number");

  Rational rat = 0;
  Rational coef = 0;
  Int rad = 0;

  if (s.at_root()) {
    coef = 1;
    rad = s.parse_root();
  } else {
    Rational first = s.parse_rat();
    if (s.consume('*')) {
      coef = std::move(first);
      rad = s.parse_root();
    } else if (s.consume('+') || s.peek() == '-') {
      const bool negative = s.consume('-');
      rat = std::move(first);
      if (s.at_root()) {
        coef = 1;
      } else {
        coef = s.parse_rat();
        if (!s.consume('*')) s.fail("'*'");
      }
      rad = s.parse_root();
      if (negative) coef = -coef;
    } else {
      rat = std::move(first);
    }
  }
  if (!s.done()) s.fail("end of input");
  return ExactReal(std::move(rat), std::move(coef), std::move(rad));
}

std::string format_number(const ExactReal& x) { return to_string(x); }

std::vector<ExactReal> parse_number_list(std::string_view text) {
  std::vector<ExactReal> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma - start);
    values.push_back(parse_number(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace avgiv
