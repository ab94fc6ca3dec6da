#include "cperm/constraints.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cperm {

Alphabet alphabet_of(std::u32string_view s) { return Alphabet(SymbolSet(s)); }

namespace {

void append_positions(std::ostringstream& os, const char* label,
                      const std::vector<std::size_t>& positions) {
  if (positions.empty()) return;
  if (os.tellp() > 0) os << "; ";
  os << label;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    os << (i == 0 ? " " : ", ") << positions[i];
  }
}

}  // namespace

std::string ValidationReport::describe() const {
  std::ostringstream os;
  append_positions(os, "conflicting allow/forbid at position(s)", conflicts);
  append_positions(os, "position(s) out of range", out_of_bounds);
  append_positions(os, "empty symbol set at position(s)", empty_sets);
  return os.str();
}

ValidationReport validate(const ConstraintSet& cs) {
  std::set<std::size_t> allowed, forbidden, bounds, empty;
  for (const auto& c : cs.constraints) {
    if (c.position < 1 || c.position > cs.length) bounds.insert(c.position);
    if (c.symbols.empty()) empty.insert(c.position);
    (c.kind == ConstraintKind::Allowed ? allowed : forbidden).insert(c.position);
  }
  ValidationReport report;
  std::set_intersection(allowed.begin(), allowed.end(), forbidden.begin(),
                        forbidden.end(), std::back_inserter(report.conflicts));
  report.out_of_bounds.assign(bounds.begin(), bounds.end());
  report.empty_sets.assign(empty.begin(), empty.end());
  return report;
}

PermittedMatrix PermittedMatrix::unconstrained(const Alphabet& alpha,
                                               std::size_t n) {
  return PermittedMatrix(std::vector<SymbolSet>(n, alpha.symbols()));
}

bool PermittedMatrix::admits(std::u32string_view w) const {
  if (w.size() != rows_.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!rows_[i].contains(Symbol{w[i]})) return false;
  }
  return true;
}

PermittedMatrix normalize(const ConstraintSet& cs, const Alphabet& alpha) {
  if (auto report = validate(cs); !report.ok()) {
    throw std::invalid_argument("invalid constraint set: " + report.describe());
  }

  struct Clauses {
    bool has_allowed = false;
    bool has_forbidden = false;
    SymbolSet allowed;
    SymbolSet forbidden;
  };
  std::map<std::size_t, Clauses> by_position;
  for (const auto& c : cs.constraints) {
    auto& slot = by_position[c.position];
    if (c.kind == ConstraintKind::Allowed) {
      slot.has_allowed = true;
      slot.allowed.insert_all(c.symbols);
    } else {
      slot.has_forbidden = true;
      slot.forbidden.insert_all(c.symbols);
    }
  }

  std::vector<SymbolSet> rows(cs.length, alpha.symbols());
  for (const auto& [position, slot] : by_position) {
    auto& row = rows[position - 1];
    if (slot.has_allowed) {
      row = slot.allowed.intersect(alpha.symbols());
    } else if (slot.has_forbidden) {
      row = alpha.symbols().minus(slot.forbidden);
    }
  }
  return PermittedMatrix(std::move(rows));
}

SymbolSet foreign_allowed_symbols(const ConstraintSet& cs,
                                  const Alphabet& alpha) {
  SymbolSet foreign;
  for (const auto& c : cs.constraints) {
    if (c.kind != ConstraintKind::Allowed) continue;
    foreign.insert_all(c.symbols.minus(alpha.symbols()));
  }
  return foreign;
}

}  // namespace cperm
