#include "cperm/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cperm::oracle {

std::vector<Word> distinct_permutations(std::u32string_view s) {
  Word w(s);
  std::sort(w.begin(), w.end());
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

OracleResult filter(const std::vector<Word>& perms, const PermittedMatrix& pm) {
  OracleResult result;
  result.total_distinct = perms.size();
  for (const auto& p : perms) {
    if (p.size() != pm.size()) {
      throw std::invalid_argument("word of length " + std::to_string(p.size()) +
                                  " checked against " +
                                  std::to_string(pm.size()) + " rows");
    }
    if (pm.admits(p)) result.outputs.push_back(p);
  }
  return result;
}

void sort_by_symbol_order(std::vector<Word>& words, std::u32string_view order) {
  std::unordered_map<char32_t, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);
  auto key = [&](char32_t c) {
    auto it = rank.find(c);
    return it == rank.end() ? std::pair{order.size(), c} : std::pair{it->second, c};
  };
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [&](char32_t x, char32_t y) { return key(x) < key(y); });
  });
}

}  // namespace cperm::oracle
