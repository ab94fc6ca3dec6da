#ifndef CPERM_TESTS_PREFIX_ORACLE_HPP
#define CPERM_TESTS_PREFIX_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "cperm/constraints.hpp"

namespace cperm::testing {

struct ExpectedTree {
  std::uint64_t nodes = 0;      // prefixes the expansion must visit
  std::uint64_t dead_ends = 0;  // those with no admissible one-symbol extension
  std::uint64_t leaves = 0;
};

// Brute force over index permutations: collects every distinct prefix of
// every rearrangement of s, keeps the prefixes admitted position by position,
// and counts the ones that cannot be extended. Exponential; n <= 8.
inline ExpectedTree expected_tree(std::u32string_view s,
                                  const PermittedMatrix& pm) {
  const std::size_t n = s.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::set<Word> prefixes;
  do {
    Word w;
    prefixes.insert(w);
    for (std::size_t i : idx) {
      w.push_back(s[i]);
      prefixes.insert(w);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));

  std::set<Word> admitted;
  for (const auto& p : prefixes) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) {
      ok = pm.rows()[i].contains(Symbol{p[i]});
    }
    if (ok) admitted.insert(p);
  }

  ExpectedTree tree;
  tree.nodes = admitted.size();
  for (const auto& p : admitted) {
    if (p.size() == n) {
      ++tree.leaves;
      continue;
    }
    bool extends = false;
    for (char32_t c : s) {
      if (admitted.count(p + c)) {
        extends = true;
        break;
      }
    }
    if (!extends) ++tree.dead_ends;
  }
  return tree;
}

}  // namespace cperm::testing

#endif  // CPERM_TESTS_PREFIX_ORACLE_HPP
