#ifndef CPERM_SYMBOL_HPP
#define CPERM_SYMBOL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cperm {

/// One Unicode scalar value. Ordered by code point.
struct Symbol {
  char32_t value = 0;

  constexpr Symbol() = default;
  constexpr explicit Symbol(char32_t v) : value(v) {}

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

/// A sequence of symbols, e.g. the input string S or an emitted permutation.
using Word = std::u32string;

/// Sorted set of distinct symbols backed by a flat vector.
class SymbolSet {
 public:
  SymbolSet() = default;
  SymbolSet(std::initializer_list<char32_t> symbols);
  explicit SymbolSet(std::u32string_view symbols);

  void insert(Symbol s);
  void insert_all(const SymbolSet& other);

  [[nodiscard]] bool contains(Symbol s) const {
    return std::binary_search(symbols_.begin(), symbols_.end(), s);
  }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }
  [[nodiscard]] std::size_t size() const { return symbols_.size(); }

  [[nodiscard]] auto begin() const { return symbols_.begin(); }
  [[nodiscard]] auto end() const { return symbols_.end(); }
  [[nodiscard]] const std::vector<Symbol>& symbols() const { return symbols_; }

  /// The members as a word, ascending.
  [[nodiscard]] Word to_word() const;

  [[nodiscard]] SymbolSet intersect(const SymbolSet& other) const;
  [[nodiscard]] SymbolSet minus(const SymbolSet& other) const;
  [[nodiscard]] bool is_subset_of(const SymbolSet& other) const;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

 private:
  std::vector<Symbol> symbols_;  // strictly ascending
};

/// Raised when a byte sequence is not well-formed UTF-8.
class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(std::size_t byte_offset, const std::string& what)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  [[nodiscard]] std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Decodes UTF-8. Rejects overlong forms, surrogates and values past U+10FFFF.
Word decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view word);
std::string encode_utf8(Symbol s);

}  // namespace cperm

#endif  // CPERM_SYMBOL_HPP
