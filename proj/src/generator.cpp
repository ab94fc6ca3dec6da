#include "cperm/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cperm {

MultisetCounter::MultisetCounter(std::u32string_view s, bool sort_symbols) {
  for (char32_t c : s) {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [c](const Entry& e) { return e.symbol.value == c; });
    if (it == entries_.end()) {
      entries_.push_back({Symbol{c}, 1});
    } else {
      ++it->count;
    }
  }
  if (sort_symbols) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.symbol < b.symbol; });
  }
  total_ = s.size();
}

PermutationStream::PermutationStream(std::u32string_view s,
                                     const PermittedMatrix& pm,
                                     GenerateOptions options)
    : n_(s.size()), counter_(s, options.sort_input) {
  if (pm.size() != s.size()) {
    throw std::invalid_argument(
        "permitted matrix has " + std::to_string(pm.size()) +
        " rows but the input has " + std::to_string(s.size()) + " symbols");
  }
  permitted_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto& row = permitted_[i];
    row.resize(counter_.distinct());
    for (std::size_t k = 0; k < counter_.distinct(); ++k) {
      row[k] = pm.rows()[i].contains(counter_.entries()[k].symbol) ? 1 : 0;
    }
  }
  stack_.reserve(n_ + 1);
  chosen_.reserve(n_);
  prefix_.reserve(n_);
}

// Enters the node for the current prefix.
void PermutationStream::visit() {
  ++stats_.calls;
  if (prefix_.size() == n_) {
    ++stats_.emitted;
    return;
  }
  stack_.push_back(Frame{});
  const std::size_t level_index = prefix_.size();
  bool any = false;
  for (std::size_t k = 0; k < counter_.distinct() && !any; ++k) {
    any = eligible(level_index, k);
  }
  if (!any) ++stats_.dead_ends;
}

bool PermutationStream::advance() {
  if (done_) return false;

  if (!started_) {
    started_ = true;
    visit();
    if (n_ == 0) return true;
  } else if (prefix_.size() == n_ && !chosen_.empty()) {
    // Leave the leaf handed out by the previous call.
    counter_.put_back(chosen_.back());
    chosen_.pop_back();
    prefix_.pop_back();
  }

  while (!stack_.empty()) {
    const std::size_t level_index = prefix_.size();
    Frame& frame = stack_.back();
    std::size_t k = frame.cursor;
    while (k < counter_.distinct() && !eligible(level_index, k)) ++k;

    if (k < counter_.distinct()) {
      frame.cursor = k + 1;
      counter_.take(k);
      chosen_.push_back(k);
      prefix_.push_back(counter_.entries()[k].symbol.value);
      visit();
      if (prefix_.size() == n_) return true;
      continue;
    }

    stack_.pop_back();
    if (!chosen_.empty()) {
      counter_.put_back(chosen_.back());
      chosen_.pop_back();
      prefix_.pop_back();
    }
  }

  done_ = true;
  return false;
}

std::optional<Word> PermutationStream::next() {
  if (!advance()) return std::nullopt;
  return prefix_;
}

GenStats PermutationStream::stats() const {
  GenStats s = stats_;
  s.partial = !done_;
  return s;
}

Word PermutationStream::symbol_order() const {
  Word order;
  for (const auto& e : counter_.entries()) order.push_back(e.symbol.value);
  return order;
}

PermutationStream generate(std::u32string_view s, const PermittedMatrix& pm,
                           GenerateOptions options) {
  return PermutationStream(s, pm, options);
}

std::uint64_t count(std::u32string_view s, const PermittedMatrix& pm) {
  PermutationStream stream(s, pm);
  std::uint64_t total = 0;
  while (stream.advance()) ++total;
  return total;
}

}  // namespace cperm
