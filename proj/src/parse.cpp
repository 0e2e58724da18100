#include <cctype>
#include <string>

#include "primeveil/poly.hpp"

namespace primeveil {

const char* parse_error_kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::ConstantTerm: return "constant_term";
    case ParseErrorKind::Negative: return "negative";
    case ParseErrorKind::UnknownVariable: return "unknown_variable";
    case ParseErrorKind::Empty: return "empty";
  }
  return "unknown";
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

std::string read_digits(Cursor& cur) {
  std::string digits;
  while (!cur.eof() && is_digit(cur.peek())) {
    digits += cur.peek();
    ++cur.pos;
  }
  return digits;
}

unsigned parse_exponent(Cursor& cur) {
  cur.skip_ws();
  std::size_t at = cur.pos;
  std::string digits = read_digits(cur);
  if (digits.empty())
    throw ParseError(ParseErrorKind::Syntax, at, "expected exponent digits after '^'");
  if (digits.size() > 9 || std::stoul(digits) > kMaxExponent)
    throw ParseError(ParseErrorKind::Syntax, at,
                     "exponent exceeds " + std::to_string(kMaxExponent));
  return static_cast<unsigned>(std::stoul(digits));
}

// term := coeff? factor*, at least one variable factor required
void parse_term(Cursor& cur, Polynomial::TermMap& terms) {
  cur.skip_ws();
  std::size_t term_start = cur.pos;

  Nat coeff = 1;
  bool saw_coeff = false;
  if (!cur.eof() && is_digit(cur.peek())) {
    coeff = Nat(read_digits(cur), 10);
    saw_coeff = true;
  }

  unsigned ex = 0, ey = 0;
  bool saw_factor = false;
  bool pending_star = false;
  for (;;) {
    cur.skip_ws();
    if (!cur.eof() && cur.peek() == '*') {
      if (pending_star)
        throw ParseError(ParseErrorKind::Syntax, cur.pos, "unexpected '*'");
      if (!saw_coeff && !saw_factor)
        throw ParseError(ParseErrorKind::Syntax, cur.pos, "'*' without left operand");
      pending_star = true;
      ++cur.pos;
      cur.skip_ws();
    }
    if (cur.eof() || (cur.peek() != 'x' && cur.peek() != 'y')) {
      if (pending_star)
        throw ParseError(ParseErrorKind::Syntax, cur.pos, "expected variable after '*'");
      break;
    }
    std::size_t factor_at = cur.pos;
    char var = cur.peek();
    ++cur.pos;
    unsigned e = 1;
    cur.skip_ws();
    if (!cur.eof() && cur.peek() == '^') {
      ++cur.pos;
      e = parse_exponent(cur);
    }
    unsigned& slot = (var == 'x') ? ex : ey;
    if (slot + e > kMaxExponent)
      throw ParseError(ParseErrorKind::Syntax, factor_at,
                       "combined exponent exceeds " + std::to_string(kMaxExponent));
    slot += e;
    saw_factor = true;
    pending_star = false;
  }

  if (!saw_factor && !saw_coeff)
    throw ParseError(ParseErrorKind::Syntax, cur.pos, "expected a term");
  if (!saw_factor)
    throw ParseError(ParseErrorKind::ConstantTerm, term_start,
                     "term has no variable factor");
  if (ex == 0 && ey == 0)
    throw ParseError(ParseErrorKind::ConstantTerm, term_start,
                     "term reduces to a constant");

  if (coeff != 0) terms[{ex, ey}] += coeff;
}

}  // namespace

Polynomial parse(std::string_view text) {
  // '-' and foreign letters are rejected wherever they appear
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-')
      throw ParseError(ParseErrorKind::Negative, i, "negative coefficients are not allowed");
    if (is_letter(text[i]) && text[i] != 'x' && text[i] != 'y')
      throw ParseError(ParseErrorKind::UnknownVariable, i,
                       std::string("unknown variable '") + text[i] + "'");
  }

  Cursor cur{text};
  cur.skip_ws();
  if (cur.eof()) throw ParseError(ParseErrorKind::Empty, 0, "empty polynomial");

  Polynomial::TermMap terms;
  for (;;) {
    parse_term(cur, terms);
    cur.skip_ws();
    if (cur.eof()) break;
    if (cur.peek() == '+') {
      ++cur.pos;
      cur.skip_ws();
      if (cur.eof())
        throw ParseError(ParseErrorKind::Syntax, cur.pos, "trailing '+'");
      continue;
    }
    throw ParseError(ParseErrorKind::Syntax, cur.pos, "expected '+' between terms");
  }

  // terms with coefficient 0 contribute nothing and may leave nothing behind
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  if (terms.empty())
    throw ParseError(ParseErrorKind::Empty, 0, "polynomial has no nonzero terms");

  return Polynomial::from_terms(std::move(terms));
}

}  // namespace primeveil
