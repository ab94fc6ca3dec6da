#include "cperm/symbol.hpp"

#include <iterator>

namespace cperm {

SymbolSet::SymbolSet(std::initializer_list<char32_t> symbols) {
  for (char32_t c : symbols) insert(Symbol{c});
}

SymbolSet::SymbolSet(std::u32string_view symbols) {
  symbols_.reserve(symbols.size());
  for (char32_t c : symbols) symbols_.emplace_back(c);
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

void SymbolSet::insert(Symbol s) {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end() || *it != s) symbols_.insert(it, s);
}

void SymbolSet::insert_all(const SymbolSet& other) {
  std::vector<Symbol> merged;
  merged.reserve(symbols_.size() + other.symbols_.size());
  std::set_union(symbols_.begin(), symbols_.end(), other.symbols_.begin(),
                 other.symbols_.end(), std::back_inserter(merged));
  symbols_ = std::move(merged);
}

Word SymbolSet::to_word() const {
  Word w;
  w.reserve(symbols_.size());
  for (Symbol s : symbols_) w.push_back(s.value);
  return w;
}

SymbolSet SymbolSet::intersect(const SymbolSet& other) const {
  SymbolSet out;
  std::set_intersection(symbols_.begin(), symbols_.end(),
                        other.symbols_.begin(), other.symbols_.end(),
                        std::back_inserter(out.symbols_));
  return out;
}

SymbolSet SymbolSet::minus(const SymbolSet& other) const {
  SymbolSet out;
  std::set_difference(symbols_.begin(), symbols_.end(), other.symbols_.begin(),
                      other.symbols_.end(), std::back_inserter(out.symbols_));
  return out;
}

bool SymbolSet::is_subset_of(const SymbolSet& other) const {
  return std::includes(other.symbols_.begin(), other.symbols_.end(),
                       symbols_.begin(), symbols_.end());
}

Word decode_utf8(std::string_view bytes) {
  Word out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto lead = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4, cp = lead & 0x07, min = 0x10000;
    } else {
      throw Utf8Error(i, "invalid UTF-8 lead byte");
    }
    if (i + len > bytes.size()) throw Utf8Error(i, "truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw Utf8Error(i, "invalid UTF-8 continuation byte");
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min) throw Utf8Error(i, "overlong UTF-8 encoding");
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Utf8Error(i, "UTF-8 sequence is not a Unicode scalar value");
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view word) {
  std::string out;
  out.reserve(word.size());
  for (char32_t cp : word) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::string encode_utf8(Symbol s) { return encode_utf8(std::u32string_view(&s.value, 1)); }

}  // namespace cperm
