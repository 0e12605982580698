#include "sl2cong/presentation.hpp"

#include <sstream>

namespace sl2cong::fp {

Presentation behr_mennicke(long long p) {
  if (p != 2 && p != 3)
    throw std::domain_error(
        "behr_mennicke: only p = 2 and p = 3 are built in; supply a presentation "
        "file for other primes");
  std::vector<std::string> gens = {"a", "b", "u"};
  auto rel = [&](std::string_view text) {
    return GenWord::parse(text, gens, /*strict_alphabet=*/true);
  };
  Presentation out;
  out.gens = gens;
  long long p2 = p * p;
  out.relators.push_back(rel("a b a b a b^-1"));                                 // (ab)^3 = b^2
  out.relators.push_back(rel("u b u b^-1"));                                     // (ub)^2 = b^2
  out.relators.push_back(rel("b u a^" + std::to_string(p) + " b u a^" + std::to_string(p) +
                             " b u a^" + std::to_string(p) + " b^-2"));          // (bua^p)^3 = b^2
  out.relators.push_back(rel("b^4"));
  out.relators.push_back(rel("u^-1 a u a^-" + std::to_string(p2)));              // u^-1 a u = a^(p^2)
  return out;
}

std::string behr_mennicke_text(long long p) { return print_presentation(behr_mennicke(p)); }

Presentation load_presentation(const std::string& text) {
  Presentation out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_gens = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line.compare(start, 5, "gens:") == 0) {
      if (have_gens) throw ParseError(lineno, int(start) + 1, "duplicate gens line");
      std::istringstream gs(line.substr(start + 5));
      std::string g;
      while (gs >> g) out.gens.push_back(g);
      if (out.gens.empty()) throw ParseError(lineno, int(start) + 1, "no generators listed");
      have_gens = true;
    } else if (line.compare(start, 4, "rel:") == 0) {
      if (!have_gens) throw ParseError(lineno, int(start) + 1, "rel before gens");
      GenWord w;
      try {
        w = GenWord::parse(line.substr(start + 4), out.gens, /*strict_alphabet=*/true);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, int(start) + 5, e.what());
      }
      if (w.empty()) throw ParseError(lineno, int(start) + 1, "empty relator");
      out.relators.push_back(std::move(w));
    } else {
      throw ParseError(lineno, int(start) + 1, "expected 'gens:' or 'rel:'");
    }
  }
  if (!have_gens) throw ParseError(lineno, 1, "missing gens line");
  return out;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.gens) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators) out += "rel: " + r.str() + "\n";
  return out;
}

void sanity_check(const Presentation& pres, const SymbolTable& images) {
  for (const auto& r : pres.relators) {
    Mat2 m = eval_word(r, images);
    if (!m.is_identity())
      throw std::runtime_error("presentation sanity check failed: relator '" + r.str() +
                               "' evaluates to " + m.str());
  }
}

SubgroupSpec embed_delta(long long p, long long r) {
  std::vector<std::string> gens = {"a", "b", "u"};
  SubgroupSpec out;
  out.gens.push_back(GenWord::parse("a", gens, true));
  out.gens.push_back(
      GenWord::parse("u^-1 b a^-" + std::to_string(r * p) + " b^-1 u", gens, true));
  SymbolTable t{{"a", atom_A()}, {"b", atom_B()}, {"u", atom_U(p)}};
  Mat2 got = eval_word(out.gens[1], t);
  Mat2 want = atom_Q(Rational(BigInt(r), BigInt(p)));
  if (!(got == want))
    throw std::logic_error("embed_delta: word evaluates to " + got.str() + ", expected " +
                           want.str());
  return out;
}

}  // namespace sl2cong::fp
