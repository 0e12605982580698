#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sl2cong/word.hpp"

namespace sl2cong::fp {

// Finitely presented group: generator names plus relators (words that equal
// the identity). Relators are freely reduced and nonempty.
struct Presentation {
  std::vector<std::string> gens;
  std::vector<GenWord> relators;
};

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Generators a, b, u with the relators
//   (ab)^3 b^-2, (ub)^2 b^-2, (b u a^p)^3 b^-2, b^4, u^-1 a u a^(-p^2).
// Only p = 2 and p = 3 are built in; other p require a presentation file.
Presentation behr_mennicke(long long p);
std::string behr_mennicke_text(long long p);

// Text format:
//   gens: a b u
//   rel: a b a b a b^-1
// Blank lines and lines starting with '#' are ignored.
Presentation load_presentation(const std::string& text);
std::string print_presentation(const Presentation& p);

// Checks that every relator evaluates to the identity under the given
// matrix assignment; throws std::runtime_error naming the violated relator.
void sanity_check(const Presentation& pres, const SymbolTable& images);

// Subgroup given by generator words over the presentation's alphabet.
struct SubgroupSpec {
  std::vector<GenWord> gens;
};

// Words over {a, b, u} for the two generators of the parabolic subgroup:
// {a, u^-1 b a^(-r p) b^-1 u}. The second word evaluates to the upper
// unipotent with entry r/p; this is verified at construction.
SubgroupSpec embed_delta(long long p, long long r);

}  // namespace sl2cong::fp
