#include "cperm/parser.hpp"

#include <limits>
#include <map>
#include <utility>

namespace cperm {

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string message, std::string snippet)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      snippet_(std::move(snippet)) {}

namespace {

bool is_ws(char32_t c) { return c == U' ' || c == U'\t'; }

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\v' || c == U'\f' ||
         c == U'\r';
}

bool needs_escape(char32_t c) {
  return c == U'{' || c == U'}' || c == U',' || c == U'#' || c == U'\\' ||
         is_space(c);
}

// Recursive descent over a single decoded line.
class LineParser {
 public:
  LineParser(std::u32string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  // Returns false for blank and comment-only lines.
  bool parse(PositionConstraint& out) {
    skip_ws();
    if (at_end() || peek() == U'#') return false;

    keyword(U"pos");
    require_ws();
    out.position = integer();
    require_ws();
    if (lookahead(U"not")) {
      keyword(U"not");
      require_ws();
      keyword(U"in");
      out.kind = ConstraintKind::Forbidden;
    } else {
      keyword(U"in");
      out.kind = ConstraintKind::Allowed;
    }
    skip_ws();
    out.symbols = set();
    skip_ws();
    if (!at_end() && peek() != U'#') fail("unexpected text after clause");
    return true;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_no_, pos_ + 1, message, encode_utf8(line_));
  }

  [[nodiscard]] bool at_end() const { return pos_ >= line_.size(); }
  [[nodiscard]] char32_t peek() const { return line_[pos_]; }

  void skip_ws() {
    while (!at_end() && is_ws(peek())) ++pos_;
  }

  void require_ws() {
    if (at_end() || !is_ws(peek())) fail("expected whitespace");
    skip_ws();
  }

  [[nodiscard]] bool lookahead(std::u32string_view word) const {
    return line_.substr(pos_, word.size()) == word;
  }

  void keyword(std::u32string_view word) {
    if (!lookahead(word)) fail("expected '" + encode_utf8(word) + "'");
    pos_ += word.size();
  }

  std::size_t integer() {
    if (at_end() || peek() < U'0' || peek() > U'9') {
      fail("expected a position number");
    }
    const std::size_t start = pos_;
    std::size_t value = 0;
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    while (!at_end() && peek() >= U'0' && peek() <= U'9') {
      const std::size_t digit = peek() - U'0';
      if (value > (kMax - digit) / 10) fail("position number is too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (value == 0) {
      pos_ = start;
      fail("positions start at 1");
    }
    return value;
  }

  Symbol symbol() {
    if (at_end()) fail("expected a symbol");
    char32_t c = peek();
    if (c == U'\\') {
      ++pos_;
      if (at_end()) fail("dangling escape at end of line");
      c = peek();
    } else if (needs_escape(c)) {
      fail("expected a symbol");
    }
    ++pos_;
    return Symbol{c};
  }

  SymbolSet set() {
    if (at_end() || peek() != U'{') fail("expected '{'");
    ++pos_;
    SymbolSet out;
    skip_ws();
    out.insert(symbol());
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected ',' or '}'");
      if (peek() == U'}') {
        ++pos_;
        return out;
      }
      if (peek() != U',') {
        fail("expected ',' or '}' (one symbol per element)");
      }
      ++pos_;
      skip_ws();
      out.insert(symbol());
    }
  }

  std::u32string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

[[noreturn]] void rethrow_utf8(std::string_view text, const Utf8Error& e) {
  const std::size_t offset = e.byte_offset();
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  std::size_t column = 1;
  for (std::size_t i = line_start; i < offset; ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++column;
  }
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string_view::npos) line_end = text.size();
  throw ParseError(line, column, e.what(),
                   std::string(text.substr(line_start, line_end - line_start)));
}

std::string render_set(const SymbolSet& set) {
  std::string out = "{";
  bool first = true;
  for (Symbol s : set) {
    if (!first) out += ',';
    first = false;
    if (needs_escape(s.value)) out += '\\';
    out += encode_utf8(s);
  }
  out += '}';
  return out;
}

}  // namespace

ConstraintSet parse(std::string_view text, std::size_t n) {
  Word decoded;
  try {
    decoded = decode_utf8(text);
  } catch (const Utf8Error& e) {
    rethrow_utf8(text, e);
  }

  ConstraintSet cs;
  cs.length = n;
  std::u32string_view rest = decoded;
  std::size_t line_no = 1;
  for (;;) {
    const std::size_t lf = rest.find(U'\n');
    std::u32string_view line = rest.substr(0, lf);
    if (!line.empty() && line.back() == U'\r') line.remove_suffix(1);

    PositionConstraint clause;
    if (LineParser(line, line_no).parse(clause)) {
      cs.constraints.push_back(std::move(clause));
    }
    if (lf == std::u32string_view::npos) break;
    rest.remove_prefix(lf + 1);
    ++line_no;
  }
  return cs;
}

ConstraintSet parse_clauses(std::span<const std::string> clauses,
                            std::size_t n) {
  std::string joined;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i > 0) joined += '\n';
    joined += clauses[i];
  }
  return parse(joined, n);
}

std::string render(const ConstraintSet& cs) {
  std::map<std::pair<std::size_t, ConstraintKind>, SymbolSet> merged;
  for (const auto& c : cs.constraints) {
    merged[{c.position, c.kind}].insert_all(c.symbols);
  }
  std::string out;
  for (const auto& [key, symbols] : merged) {
    if (!out.empty()) out += '\n';
    out += "pos " + std::to_string(key.first);
    out += key.second == ConstraintKind::Allowed ? " in " : " not in ";
    out += render_set(symbols);
  }
  return out;
}

}  // namespace cperm
