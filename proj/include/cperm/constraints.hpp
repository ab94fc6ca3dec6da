#ifndef CPERM_CONSTRAINTS_HPP
#define CPERM_CONSTRAINTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cperm/symbol.hpp"

namespace cperm {

/// Sorted distinct symbols of an input string.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(SymbolSet symbols) : symbols_(std::move(symbols)) {}

  [[nodiscard]] const SymbolSet& symbols() const { return symbols_; }
  [[nodiscard]] bool contains(Symbol s) const { return symbols_.contains(s); }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }
  [[nodiscard]] std::size_t size() const { return symbols_.size(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  SymbolSet symbols_;
};

Alphabet alphabet_of(std::u32string_view s);

enum class ConstraintKind { Allowed, Forbidden };

/// A clause restricting one 1-indexed position to (or away from) a set.
struct PositionConstraint {
  std::size_t position = 1;
  ConstraintKind kind = ConstraintKind::Allowed;
  SymbolSet symbols;

  friend bool operator==(const PositionConstraint&,
                         const PositionConstraint&) = default;
};

struct ConstraintSet {
  std::vector<PositionConstraint> constraints;
  std::size_t length = 0;  // n, the length of S

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

/// Every problem found by validate(). Each list holds ascending, distinct
/// positions.
struct ValidationReport {
  std::vector<std::size_t> conflicts;      // both Allowed and Forbidden
  std::vector<std::size_t> out_of_bounds;  // outside [1, n]
  std::vector<std::size_t> empty_sets;     // a clause with no symbols

  [[nodiscard]] bool ok() const {
    return conflicts.empty() && out_of_bounds.empty() && empty_sets.empty();
  }
  [[nodiscard]] std::string describe() const;
};

ValidationReport validate(const ConstraintSet& cs);

/// Per-position permitted symbols; rows()[i] is position i + 1.
/// Each row is a subset of the alphabet and may be empty.
class PermittedMatrix {
 public:
  PermittedMatrix() = default;
  explicit PermittedMatrix(std::vector<SymbolSet> rows)
      : rows_(std::move(rows)) {}

  /// Every position permits the whole alphabet.
  static PermittedMatrix unconstrained(const Alphabet& alpha, std::size_t n);

  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] const std::vector<SymbolSet>& rows() const { return rows_; }
  /// 1-indexed.
  [[nodiscard]] const SymbolSet& at_position(std::size_t position) const {
    return rows_.at(position - 1);
  }
  /// True iff every w[i] is permitted at position i + 1. Requires
  /// w.size() == size().
  [[nodiscard]] bool admits(std::u32string_view w) const;

  friend bool operator==(const PermittedMatrix&,
                         const PermittedMatrix&) = default;

 private:
  std::vector<SymbolSet> rows_;
};

/// Folds the constraints into a single permitted matrix:
///   - Allowed clauses at a position union, then intersect with the alphabet;
///   - otherwise Forbidden clauses union and are removed from the alphabet;
///   - an untouched position permits the whole alphabet.
/// Throws std::invalid_argument unless validate(cs).ok().
PermittedMatrix normalize(const ConstraintSet& cs, const Alphabet& alpha);

/// Allowed symbols that do not occur in the alphabet, ascending.
SymbolSet foreign_allowed_symbols(const ConstraintSet& cs,
                                  const Alphabet& alpha);

}  // namespace cperm

#endif  // CPERM_CONSTRAINTS_HPP
