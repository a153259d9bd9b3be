#ifndef DOMKIT_WORD_HPP_
#define DOMKIT_WORD_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domkit/group.hpp"

namespace domkit {

  // x_var ^ exp; var >= 1, exp != 0.
  struct Syllable {
    std::uint32_t var;
    std::int64_t  exp;
    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  // A group word kept exactly as written: no free reduction, and adjacent
  // syllables may repeat a variable.
  struct Word {
    std::vector<Syllable> syllables;

    std::uint32_t arity() const noexcept;
    friend bool operator==(Word const&, Word const&) = default;
  };

  // word := term+ ; term := atom ('^' int)? ;
  // atom := 'x' digits | '(' word ')' | '[' word ',' word ']'
  // [a,b] expands to a^-1 b^-1 a b.  An exponent on a bracketed or
  // parenthesized atom repeats it (negative: repeats the inverse).
  // Whitespace is ignored.  Throws ParseError with the column.
  Word parse_word(std::string_view text);

  Word inverse(Word const& w);
  Word commutator(Word const& a, Word const& b);

  // Syllables written out, e.g. "x1^-1x2^-1x1x2".
  std::string to_string(Word const& w);

  // Value of w with x_i := tuple[i-1]; tuple must cover the arity.
  Elem eval_word(FiniteGroup const& g, Word const& w, std::span<Elem const> tuple);

}  // namespace domkit

#endif  // DOMKIT_WORD_HPP_
