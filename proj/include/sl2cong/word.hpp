#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sl2cong/mat2.hpp"

namespace sl2cong {

// A word over a named alphabet, stored at syllable granularity. Adjacent
// syllables always have distinct symbols and nonzero exponents (free
// reduction at syllable level happens on append).
class GenWord {
 public:
  struct Syllable {
    int sym;
    BigInt exp;
    bool operator==(const Syllable&) const = default;
  };

  GenWord() = default;
  explicit GenWord(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {}

  // Whitespace-separated syllables SYM^EXP, exponent omitted when 1,
  // e.g. "A^2 Q^-1 A". With strict_alphabet the word may only use the given
  // symbols; otherwise new symbols extend the alphabet in order of first use.
  static GenWord parse(std::string_view text, std::vector<std::string> alphabet = {},
                       bool strict_alphabet = false);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Syllable>& syllables() const { return syls_; }
  bool empty() const { return syls_.empty(); }
  size_t syllable_count() const { return syls_.size(); }
  const std::string& symbol_name(int sym) const { return alphabet_[size_t(sym)]; }

  int symbol_index(std::string_view name);  // registers if absent
  void append(std::string_view sym, BigInt exp);
  void append_syllable(int sym, BigInt exp);
  void append(const GenWord& other);      // concatenate, merging at the seam
  void prepend(std::string_view sym, BigInt exp);

  GenWord inverse() const;
  GenWord pow(long long m) const;  // |m|-fold repeat of the word or its inverse

  std::string str() const;

  bool operator==(const GenWord& o) const { return str() == o.str(); }

 private:
  std::vector<std::string> alphabet_;
  std::vector<Syllable> syls_;
};

using SymbolTable = std::map<std::string, Mat2, std::less<>>;

struct UnboundSymbol : std::runtime_error {
  explicit UnboundSymbol(const std::string& what) : std::runtime_error(what) {}
};

// Product of syllable powers, left to right; the empty word is the identity.
Mat2 eval_word(const GenWord& w, const SymbolTable& t);

}  // namespace sl2cong
