#include <doctest.h>

#include <map>

#include "cperm/oracle.hpp"

using namespace cperm;

namespace {

std::uint64_t multinomial(std::u32string_view s) {
  std::map<char32_t, std::uint64_t> counts;
  for (char32_t c : s) ++counts[c];
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (auto [c, k] : counts) {
    // result *= C(placed + k, k), built up one factor at a time
    for (std::uint64_t i = 1; i <= k; ++i) {
      result = result * (placed + i) / i;
    }
    placed += k;
  }
  return result;
}

}  // namespace

TEST_CASE("distinct_permutations") {
  CHECK(oracle::distinct_permutations(U"aab") ==
        std::vector<Word>{U"aab", U"aba", U"baa"});
  CHECK(oracle::distinct_permutations(U"a") == std::vector<Word>{U"a"});
  CHECK(oracle::distinct_permutations(U"aabbc").size() == 30);
  CHECK(oracle::distinct_permutations(U"") == std::vector<Word>{U""});
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(oracle::distinct_permutations(Word(k, U'x')).size() == 1);
  }
}

TEST_CASE("distinct_permutations matches the multinomial coefficient") {
  for (Word s : {U"abacb", U"aaaabbbb", U"abcdefgh", U"aabbccdd", U"zzzy",
                 U"mississi"}) {
    const auto perms = oracle::distinct_permutations(s);
    CHECK(perms.size() == multinomial(s));
    CHECK(std::adjacent_find(perms.begin(), perms.end(),
                             std::greater_equal<>()) == perms.end());
  }
}

TEST_CASE("filter") {
  const auto perms = oracle::distinct_permutations(U"abacb");
  SUBCASE("worked example") {
    const PermittedMatrix pm({SymbolSet(U"ab"), SymbolSet(U"abc"),
                              SymbolSet(U"ab"), SymbolSet(U"abc"),
                              SymbolSet(U"abc")});
    const auto result = oracle::filter(perms, pm);
    CHECK(result.total_distinct == 30);
    CHECK(result.outputs == std::vector<Word>{
                                U"aabbc", U"aabcb", U"ababc", U"abacb", U"abbac",
                                U"abbca", U"acabb", U"acbab", U"acbba", U"baabc",
                                U"baacb", U"babac", U"babca", U"bbaac", U"bbaca",
                                U"bcaab", U"bcaba", U"bcbaa"});
  }
  SUBCASE("all-alphabet rows keep everything") {
    const auto pm = PermittedMatrix::unconstrained(alphabet_of(U"abacb"), 5);
    CHECK(oracle::filter(perms, pm).outputs == perms);
  }
  SUBCASE("an empty row keeps nothing") {
    auto rows = PermittedMatrix::unconstrained(alphabet_of(U"abc"), 5).rows();
    rows[2] = SymbolSet{};
    CHECK(oracle::filter(perms, PermittedMatrix(rows)).outputs.empty());
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(oracle::filter(perms, PermittedMatrix({SymbolSet(U"a")})),
                    std::invalid_argument);
  }
}

TEST_CASE("sort_by_symbol_order") {
  std::vector<Word> words{U"abc", U"bca", U"cab", U"acb"};
  oracle::sort_by_symbol_order(words, U"cab");
  CHECK(words == std::vector<Word>{U"cab", U"acb", U"abc", U"bca"});
}
