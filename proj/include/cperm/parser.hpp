#ifndef CPERM_PARSER_HPP
#define CPERM_PARSER_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cperm/constraints.hpp"

// Line-oriented constraint language, one clause per line:
//
//   pos 1 in {a, b}        # position 1 must be a or b
//   pos 3 not in {c}
//
// '#' starts a comment; blank lines are ignored. Inside a set, '{', '}', ',',
// '#', '\' and whitespace are written with a leading backslash.
namespace cperm {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::string snippet);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }
  [[nodiscard]] const std::string& message() const { return message_; }
  [[nodiscard]] const std::string& snippet() const { return snippet_; }

 private:
  std::size_t line_;
  std::size_t column_;  // in Unicode scalars
  std::string message_;
  std::string snippet_;
};

/// Parses UTF-8 constraint text for a string of length n. Stops at the first
/// error. Conflicts and bounds are left to validate().
ConstraintSet parse(std::string_view text, std::size_t n);

/// Same as parse() over the clauses joined with line feeds.
ConstraintSet parse_clauses(std::span<const std::string> clauses,
                            std::size_t n);

/// Canonical text: one clause per position and kind, positions ascending,
/// sets ascending, lines joined by LF with no trailing newline.
std::string render(const ConstraintSet& cs);

}  // namespace cperm

#endif  // CPERM_PARSER_HPP
