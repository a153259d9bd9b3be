#include "domkit/word.hpp"

#include <cctype>
#include <limits>

namespace domkit {

  std::uint32_t Word::arity() const noexcept {
    std::uint32_t a = 0;
    for (auto const& s : syllables) {
      a = std::max(a, s.var);
    }
    return a;
  }

  Word inverse(Word const& w) {
    Word r;
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
      r.syllables.push_back({it->var, -it->exp});
    }
    return r;
  }

  Word commutator(Word const& a, Word const& b) {
    Word r = inverse(a);
    Word bi = inverse(b);
    r.syllables.insert(r.syllables.end(), bi.syllables.begin(), bi.syllables.end());
    r.syllables.insert(r.syllables.end(), a.syllables.begin(), a.syllables.end());
    r.syllables.insert(r.syllables.end(), b.syllables.begin(), b.syllables.end());
    return r;
  }

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : s_(text) {}

      Word parse() {
        skip();
        if (at_end()) {
          throw ParseError("empty word", pos_);
        }
        Word w = word();
        skip();
        if (!at_end()) {
          throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        }
        return w;
      }

     private:
      bool at_end() const {
        return pos_ >= s_.size();
      }

      void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      bool starts_atom() {
        skip();
        return !at_end() && (s_[pos_] == 'x' || s_[pos_] == '(' || s_[pos_] == '[');
      }

      std::uint64_t digits(char const* what) {
        skip();
        std::size_t start = pos_;
        std::uint64_t v   = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
          if (v > std::numeric_limits<std::uint32_t>::max()) {
            throw ParseError(std::string(what) + " too large", start);
          }
          ++pos_;
        }
        if (pos_ == start) {
          throw ParseError(std::string("expected ") + what, pos_);
        }
        return v;
      }

      void expect(char c) {
        skip();
        if (at_end() || s_[pos_] != c) {
          throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
      }

      Word word() {
        Word w;
        if (!starts_atom()) {
          throw ParseError(at_end() ? "unexpected end of input" : "expected 'x', '(' or '['", pos_);
        }
        while (starts_atom()) {
          Word t = term();
          w.syllables.insert(w.syllables.end(), t.syllables.begin(), t.syllables.end());
        }
        return w;
      }

      Word term() {
        skip();
        bool variable = s_[pos_] == 'x';
        Word a        = atom();
        skip();
        if (at_end() || s_[pos_] != '^') {
          return a;
        }
        ++pos_;
        skip();
        std::size_t at  = pos_;
        bool        neg = false;
        if (!at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) {
          neg = s_[pos_] == '-';
          ++pos_;
        }
        auto e = static_cast<std::int64_t>(digits("exponent"));
        if (e == 0) {
          throw ParseError("exponent 0 is not allowed", at);
        }
        if (neg) {
          e = -e;
        }
        if (variable) {
          a.syllables[0].exp *= e;
          return a;
        }
        Word base = e < 0 ? inverse(a) : a;
        Word r;
        for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) {
          r.syllables.insert(r.syllables.end(), base.syllables.begin(), base.syllables.end());
        }
        return r;
      }

      Word atom() {
        char c = s_[pos_];
        if (c == 'x') {
          ++pos_;
          std::size_t at = pos_;
          auto        v  = digits("variable index");
          if (v == 0) {
            throw ParseError("variable index must be at least 1", at);
          }
          return Word{{{static_cast<std::uint32_t>(v), 1}}};
        }
        if (c == '(') {
          ++pos_;
          Word w = word();
          expect(')');
          return w;
        }
        ++pos_;
        Word a = word();
        expect(',');
        Word b = word();
        expect(']');
        return commutator(a, b);
      }

      std::string_view s_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  Word parse_word(std::string_view text) {
    return Parser(text).parse();
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (auto const& s : w.syllables) {
      out += "x" + std::to_string(s.var);
      if (s.exp != 1) {
        out += "^" + std::to_string(s.exp);
      }
    }
    return out;
  }

  Elem eval_word(FiniteGroup const& g, Word const& w, std::span<Elem const> tuple) {
    Elem acc = FiniteGroup::identity;
    for (auto const& s : w.syllables) {
      if (s.var > tuple.size()) {
        throw ValidationError("word uses x" + std::to_string(s.var) + " but only "
                              + std::to_string(tuple.size()) + " values were supplied");
      }
      Elem x = tuple[s.var - 1];
      acc    = s.exp == 1 ? g.mul(acc, x) : g.mul(acc, g.pow(x, s.exp));
    }
    return acc;
  }

}  // namespace domkit
