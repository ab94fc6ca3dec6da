#ifndef CPERM_GENERATOR_HPP
#define CPERM_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cperm/constraints.hpp"
#include "cperm/symbol.hpp"

namespace cperm {

/// Instrumentation of one expansion.
struct GenStats {
  std::uint64_t calls = 0;      // expansion nodes visited, root and leaves included
  std::uint64_t emitted = 0;    // complete permutations produced
  std::uint64_t dead_ends = 0;  // inner nodes with no eligible symbol
  bool partial = true;          // false once the stream is exhausted

  friend bool operator==(const GenStats&, const GenStats&) = default;
};

struct GenerateOptions {
  /// Sort the input first so output is lexicographic. When false, each
  /// level tries symbols in order of their first occurrence in the input.
  bool sort_input = true;
};

/// Remaining symbols with multiplicities, in expansion order.
class MultisetCounter {
 public:
  struct Entry {
    Symbol symbol;
    std::size_t count;
  };

  MultisetCounter() = default;
  MultisetCounter(std::u32string_view s, bool sort_symbols);

  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t total() const { return total_; }
  [[nodiscard]] std::size_t distinct() const { return entries_.size(); }
  [[nodiscard]] std::size_t count(std::size_t index) const {
    return entries_[index].count;
  }
  void take(std::size_t index) {
    --entries_[index].count;
    --total_;
  }
  void put_back(std::size_t index) {
    ++entries_[index].count;
    ++total_;
  }

 private:
  std::vector<Entry> entries_;
  std::size_t total_ = 0;
};

/// Lazy, single-consumer stream of the permutations of a string that fit a
/// permitted matrix. Each distinct permutation is produced once.
///
/// The expansion is depth first. A node at level L (1-indexed, L = n + 1 -
/// remaining symbols) branches once per distinct remaining symbol that row L
/// permits; level n + 1 emits the prefix. Uses an explicit stack, so depth is
/// bounded by memory rather than the call stack.
class PermutationStream {
 public:
  /// Throws std::invalid_argument if pm.size() != s.size().
  PermutationStream(std::u32string_view s, const PermittedMatrix& pm,
                    GenerateOptions options = {});

  /// The next permutation, or nullopt at end of stream.
  std::optional<Word> next();

  /// Steps to the next permutation without copying it out. On true, the
  /// permutation is available through current() until the next call.
  bool advance();
  [[nodiscard]] const Word& current() const { return prefix_; }

  [[nodiscard]] bool exhausted() const { return done_; }
  /// Counters so far; `partial` is set until the stream is exhausted.
  [[nodiscard]] GenStats stats() const;

  /// Symbols in the order each level tries them.
  [[nodiscard]] Word symbol_order() const;

 private:
  struct Frame {
    std::size_t cursor = 0;  // next index into counter_ to try
  };

  void visit();
  [[nodiscard]] bool eligible(std::size_t level_index, std::size_t k) const {
    return counter_.count(k) > 0 && permitted_[level_index][k] != 0;
  }

  std::size_t n_ = 0;
  MultisetCounter counter_;
  // permitted_[i][k]: counter_ entry k is allowed at position i + 1
  std::vector<std::vector<char>> permitted_;
  std::vector<Frame> stack_;
  std::vector<std::size_t> chosen_;  // counter_ indices along the path
  Word prefix_;
  GenStats stats_;
  bool started_ = false;
  bool done_ = false;
};

PermutationStream generate(std::u32string_view s, const PermittedMatrix& pm,
                           GenerateOptions options = {});

/// Number of permutations generate() would yield, without building strings.
std::uint64_t count(std::u32string_view s, const PermittedMatrix& pm);

inline GenStats stats_of(const PermutationStream& stream) {
  return stream.stats();
}

}  // namespace cperm

#endif  // CPERM_GENERATOR_HPP
