#ifndef CPERM_ORACLE_HPP
#define CPERM_ORACLE_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "cperm/constraints.hpp"
#include "cperm/symbol.hpp"

// Brute-force reference: enumerate every distinct rearrangement, then filter.
// Shares no enumeration code with the generator so the two can check each
// other. Factorial time and memory.
namespace cperm::oracle {

struct OracleResult {
  std::vector<Word> outputs;  // strictly ascending
  std::uint64_t total_distinct = 0;
};

/// Every distinct rearrangement of s, ascending.
std::vector<Word> distinct_permutations(std::u32string_view s);

/// Keeps the words admitted by pm. Throws std::invalid_argument if a word's
/// length differs from pm.size().
OracleResult filter(const std::vector<Word>& perms, const PermittedMatrix& pm);

inline OracleResult solve(std::u32string_view s, const PermittedMatrix& pm) {
  return filter(distinct_permutations(s), pm);
}

/// Re-sorts words lexicographically under a custom symbol order (the order
/// the generator uses when the input is not sorted). Symbols not listed
/// compare after listed ones, by code point.
void sort_by_symbol_order(std::vector<Word>& words, std::u32string_view order);

}  // namespace cperm::oracle

#endif  // CPERM_ORACLE_HPP
