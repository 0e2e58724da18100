#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace primeveil {

enum class ParseErrorKind {
  Syntax,
  ConstantTerm,
  Negative,
  UnknownVariable,
  Empty,
};

// Lexical or structural error in a polynomial string. `offset` is the byte
// position in the original input.
class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        kind_(kind),
        offset_(offset) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

const char* parse_error_kind_name(ParseErrorKind kind);

// A substitution produced a nonzero constant term, leaving the polynomial
// class handled by this library.
class ConstantTermError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotUnivariateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured work or size guard tripped before the scan started or while
// it ran; nothing was decided about the polynomial.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An identity the implementation relies on failed to hold; always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Work and size guards shared by enumeration-heavy operations.
struct Limits {
  std::uint64_t b_cap = 4096;                 // max allowed tuple bound B
  std::uint64_t max_points = 10'000'000;      // value-enumeration probe guard
  std::uint64_t max_tuples = 100'000'000;     // projected tuple-scan guard
  std::uint64_t max_sweep_points = 100'000'000;
  std::uint64_t max_grid_cells = 16'777'216;  // value cache; larger scans re-evaluate
};

}  // namespace primeveil
