#include "sl2cong/word.hpp"

#include <algorithm>
#include <sstream>

namespace sl2cong {

int GenWord::symbol_index(std::string_view name) {
  for (size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return int(i);
  alphabet_.emplace_back(name);
  return int(alphabet_.size()) - 1;
}

void GenWord::append_syllable(int sym, BigInt exp) {
  if (exp.is_zero()) return;
  if (!syls_.empty() && syls_.back().sym == sym) {
    syls_.back().exp += exp;
    if (syls_.back().exp.is_zero()) syls_.pop_back();
    return;
  }
  syls_.push_back(Syllable{sym, std::move(exp)});
}

void GenWord::append(std::string_view sym, BigInt exp) {
  append_syllable(symbol_index(sym), std::move(exp));
}

void GenWord::append(const GenWord& other) {
  for (const auto& s : other.syls_)
    append(other.alphabet_[size_t(s.sym)], s.exp);
}

void GenWord::prepend(std::string_view sym, BigInt exp) {
  if (exp.is_zero()) return;
  int idx = symbol_index(sym);
  if (!syls_.empty() && syls_.front().sym == idx) {
    syls_.front().exp += exp;
    if (syls_.front().exp.is_zero()) syls_.erase(syls_.begin());
    return;
  }
  syls_.insert(syls_.begin(), Syllable{idx, std::move(exp)});
}

GenWord GenWord::inverse() const {
  GenWord out(alphabet_);
  for (size_t i = syls_.size(); i-- > 0;)
    out.append_syllable(syls_[i].sym, -syls_[i].exp);
  return out;
}

GenWord GenWord::pow(long long m) const {
  GenWord out(alphabet_);
  if (m == 0) return out;
  const GenWord base = m > 0 ? *this : inverse();
  for (long long i = 0, n = m > 0 ? m : -m; i < n; ++i) out.append(base);
  return out;
}

GenWord GenWord::parse(std::string_view text, std::vector<std::string> alphabet,
                       bool strict_alphabet) {
  GenWord out(std::move(alphabet));
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string sym = tok;
    BigInt exp = 1;
    if (size_t caret = tok.find('^'); caret != std::string::npos) {
      sym = tok.substr(0, caret);
      std::string es = tok.substr(caret + 1);
      if (es.empty()) throw std::invalid_argument("word parse: missing exponent in '" + tok + "'");
      exp = BigInt(es);
    }
    if (sym.empty()) throw std::invalid_argument("word parse: empty symbol in '" + tok + "'");
    if (strict_alphabet &&
        std::find(out.alphabet_.begin(), out.alphabet_.end(), sym) == out.alphabet_.end())
      throw std::invalid_argument("word parse: unknown symbol '" + sym + "'");
    out.append(sym, std::move(exp));
  }
  return out;
}

std::string GenWord::str() const {
  std::string out;
  for (const auto& s : syls_) {
    if (!out.empty()) out.push_back(' ');
    out += alphabet_[size_t(s.sym)];
    if (!s.exp.is_one()) {
      out.push_back('^');
      out += s.exp.str();
    }
  }
  return out;
}

Mat2 eval_word(const GenWord& w, const SymbolTable& t) {
  Mat2 acc;
  for (const auto& s : w.syllables()) {
    const std::string& name = w.symbol_name(s.sym);
    auto it = t.find(name);
    if (it == t.end()) throw UnboundSymbol("eval_word: unbound symbol '" + name + "'");
    acc = acc * it->second.pow(s.exp);
  }
  return acc;
}

}  // namespace sl2cong
