#include "domkit/variety.hpp"

#include <algorithm>
#include <numeric>

namespace domkit {

  namespace {

    bool is_literal_commutator(Word const& w) {
      auto const& s = w.syllables;
      return s.size() == 4 && s[0].var != s[1].var && s[0] == Syllable{s[0].var, -1}
             && s[1] == Syllable{s[1].var, -1} && s[2] == Syllable{s[0].var, 1}
             && s[3] == Syllable{s[1].var, 1};
    }

    bool is_literal_trivial(Word const& w) {
      return w.syllables.size() == 1 && (w.syllables[0].exp == 1 || w.syllables[0].exp == -1);
    }

    std::optional<std::uint64_t> literal_power(Word const& w) {
      if (w.syllables.size() != 1) {
        return std::nullopt;
      }
      auto e = w.syllables[0].exp;
      return static_cast<std::uint64_t>(e < 0 ? -e : e);
    }

    bool same_presentation(Variety const& a, Variety const& b) {
      if (a.is_product() != b.is_product()) {
        return false;
      }
      if (!a.is_product()) {
        return a.laws() == b.laws() && a.exponent() == b.exponent();
      }
      if (a.factors().size() != b.factors().size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.factors().size(); ++i) {
        if (!same_presentation(a.factors()[i], b.factors()[i])) {
          return false;
        }
      }
      return true;
    }

    bool is_trivial_variety(Variety const& v) {
      if (v.is_product()) {
        return std::all_of(v.factors().begin(), v.factors().end(), is_trivial_variety);
      }
      auto e = v.exponent();
      return (e && *e == 1)
             || std::any_of(v.laws().begin(), v.laws().end(), is_literal_trivial);
    }

    // Does every group in v evidently satisfy the law w?
    bool evidently_satisfies(Variety const& v, Word const& w) {
      if (v.is_product()) {
        return false;
      }
      if (std::find(v.laws().begin(), v.laws().end(), w) != v.laws().end()) {
        return true;
      }
      if (is_literal_commutator(w) && v.is_abelian()) {
        return true;
      }
      if (auto p = literal_power(w); p && *p > 0) {
        auto e = v.exponent();
        return e && *p % *e == 0;
      }
      return false;
    }

    std::vector<Elem> class_representatives(FiniteGroup const& g, Subgroup const& w) {
      std::vector<char> seen(g.order(), 0);
      std::vector<Elem> reps;
      std::vector<Elem> stack;
      for (Elem x : w.elements) {
        if (seen[x]) {
          continue;
        }
        reps.push_back(x);
        seen[x] = 1;
        stack.assign(1, x);
        while (!stack.empty()) {
          Elem y = stack.back();
          stack.pop_back();
          for (Elem s : w.generators) {
            Elem z = g.conj(s, y);
            if (!seen[z]) {
              seen[z] = 1;
              stack.push_back(z);
            }
          }
        }
      }
      return reps;
    }

    // Smallest subgroup containing gens and normalized by w.
    Subgroup closure_normal_in(FiniteGroup const& g, Subgroup const& w, std::vector<Elem> gens) {
      Subgroup cur = closure(g, gens);
      bool     grew = true;
      while (grew) {
        grew = false;
        for (Elem s : w.generators) {
          for (std::size_t i = 0; i < gens.size() && !grew; ++i) {
            Elem c = g.conj(s, gens[i]);
            if (!cur.contains(c)) {
              gens.push_back(c);
              cur  = closure(g, gens);
              grew = true;
            }
          }
          if (grew) {
            break;
          }
        }
      }
      return cur;
    }

    struct BasisScan {
      Subgroup subgroup;
      bool     nontrivial = false;
    };

    // Subgroup generated by all law values over tuples from w.  With
    // stop_at_first, returns as soon as one nonidentity value appears.
    BasisScan scan_basis(FiniteGroup const& g, Variety const& v, Subgroup const& w,
                         Limits const& limits, VerbalOptions opts, bool stop_at_first) {
      BasisScan out{trivial_subgroup(), false};
      if (v.laws().empty() || w.is_trivial()) {
        return out;
      }
      std::vector<Elem> first = opts.class_representatives ? class_representatives(g, w)
                                                           : w.elements;
      std::vector<Elem> gens;
      Subgroup          cur = trivial_subgroup();
      for (Word const& law : v.laws()) {
        std::uint32_t a     = law.arity();
        // Tuples beyond the law's arity never matter.
        long double   count = static_cast<long double>(first.size());
        for (std::uint32_t i = 1; i < a; ++i) {
          count *= static_cast<long double>(w.order());
        }
        if (count > static_cast<long double>(limits.tuple_budget)) {
          throw CapExceeded("verbal subgroup: law " + to_string(law) + " needs "
                            + std::to_string(static_cast<unsigned long long>(count))
                            + " evaluations, above the tuple budget of "
                            + std::to_string(limits.tuple_budget));
        }
        std::vector<std::size_t> idx(a, 0);
        std::vector<Elem>        tuple(a);
        for (;;) {
          tuple[0] = first[idx[0]];
          for (std::uint32_t i = 1; i < a; ++i) {
            tuple[i] = w.elements[idx[i]];
          }
          Elem val = eval_word(g, law, tuple);
          if (val != FiniteGroup::identity && !cur.contains(val)) {
            out.nontrivial = true;
            if (stop_at_first) {
              return out;
            }
            gens.push_back(val);
            cur = closure(g, gens);
            if (cur.order() == w.order()) {
              out.subgroup = cur;
              return out;
            }
          }
          bool done = true;
          for (std::uint32_t k = a; k-- > 0;) {
            std::size_t lim = k == 0 ? first.size() : w.elements.size();
            if (++idx[k] < lim) {
              done = false;
              break;
            }
            idx[k] = 0;
          }
          if (done) {
            break;
          }
        }
      }
      out.subgroup = opts.class_representatives && !gens.empty()
                         ? closure_normal_in(g, w, gens)
                         : cur;
      return out;
    }

  }  // namespace

  Variety Variety::basis(std::string name, std::vector<Word> laws,
                         std::optional<std::uint64_t> exponent, bool declared_abelian) {
    Variety v;
    v.name_ = std::move(name);
    if (exponent && *exponent == 0) {
      throw ValidationError("variety " + v.name_ + ": declared exponent must be positive");
    }
    std::optional<std::uint64_t> e = exponent;
    bool abelian = declared_abelian;
    for (Word const& w : laws) {
      if (w.syllables.empty()) {
        throw ValidationError("variety " + v.name_ + ": empty law");
      }
      if (auto p = literal_power(w)) {
        e = e ? std::gcd(*e, *p) : *p;
      }
      abelian = abelian || is_literal_commutator(w) || is_literal_trivial(w);
    }
    v.laws_     = std::move(laws);
    v.exponent_ = e;
    v.abelian_  = abelian || (e && *e <= 2);
    return v;
  }

  Variety Variety::basis(std::string name, std::vector<std::string> const& laws,
                         std::optional<std::uint64_t> exponent, bool declared_abelian) {
    std::vector<Word> words;
    for (auto const& s : laws) {
      words.push_back(parse_word(s));
    }
    return basis(std::move(name), std::move(words), exponent, declared_abelian);
  }

  Variety Variety::product(std::string name, std::vector<Variety> factors) {
    if (factors.size() < 2) {
      throw ValidationError("product variety " + name + " needs at least two factors");
    }
    Variety v;
    v.name_    = std::move(name);
    v.factors_ = std::move(factors);
    return v;
  }

  Variety Variety::trivial() {
    return basis("trivial", std::vector<std::string>{"x1"});
  }

  Variety Variety::all_groups() {
    return basis("all", std::vector<Word>{});
  }

  Variety Variety::abelian() {
    return basis("abelian", std::vector<std::string>{"[x1,x2]"});
  }

  Variety Variety::metabelian() {
    return product("metabelian", {abelian(), abelian()});
  }

  Variety Variety::abelian_exponent(std::uint64_t e) {
    return basis("abelian-exp" + std::to_string(e),
                 std::vector<std::string>{"[x1,x2]", "x1^" + std::to_string(e)});
  }

  std::optional<std::uint64_t> Variety::exponent() const {
    if (!is_product()) {
      return exponent_;
    }
    std::uint64_t e = 1;
    for (auto const& f : factors_) {
      auto fe = f.exponent();
      if (!fe) {
        return std::nullopt;
      }
      e *= *fe;
    }
    return e;
  }

  Variety& Variety::declare_contained_in(std::string other) {
    if (std::find(contained_in_.begin(), contained_in_.end(), other) == contained_in_.end()) {
      contained_in_.push_back(std::move(other));
      std::sort(contained_in_.begin(), contained_in_.end());
    }
    return *this;
  }

  bool Variety::evidently_contained_in(Variety const& other) const {
    if (same_presentation(*this, other) || is_trivial_variety(*this)) {
      return true;
    }
    if (!other.is_product() && other.laws().empty()) {
      return true;
    }
    if (std::find(contained_in_.begin(), contained_in_.end(), other.name()) != contained_in_.end()) {
      return true;
    }
    if (!is_product() && !other.is_product()) {
      return std::all_of(other.laws().begin(), other.laws().end(),
                         [this](Word const& w) { return evidently_satisfies(*this, w); });
    }
    if (is_product() && other.is_product() && factors_.size() == other.factors().size()) {
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (!factors_[i].evidently_contained_in(other.factors()[i])) {
          return false;
        }
      }
      return true;
    }
    if (!is_product() && other.is_product()) {
      return std::any_of(other.factors().begin(), other.factors().end(),
                         [this](Variety const& f) { return evidently_contained_in(f); });
    }
    return false;
  }

  std::pair<Variety, Variety> Variety::split() const {
    if (!is_product()) {
      throw PreconditionError("variety " + name_ + " is not a product of two varieties");
    }
    if (factors_.size() == 2) {
      return {factors_[0], factors_[1]};
    }
    std::vector<Variety> rest(factors_.begin() + 1, factors_.end());
    std::string          rest_name;
    for (auto const& f : rest) {
      rest_name += "(" + f.name() + ")";
    }
    return {factors_[0], product(rest_name, std::move(rest))};
  }

  std::string Variety::describe() const {
    std::string out = name_ + " = ";
    if (is_product()) {
      for (auto const& f : factors_) {
        out += "(" + f.name() + ")";
      }
      return out;
    }
    out += "{";
    for (std::size_t i = 0; i < laws_.size(); ++i) {
      out += (i ? ", " : "") + to_string(laws_[i]);
    }
    out += "}";
    if (exponent_) {
      out += " exponent " + std::to_string(*exponent_);
    }
    return out;
  }

  Subgroup verbal_subgroup(FiniteGroup const& g, Variety const& v, Subgroup const& within,
                           Limits const& limits, VerbalOptions opts) {
    if (!v.is_product()) {
      return scan_basis(g, v, within, limits, opts, false).subgroup;
    }
    Subgroup cur = within;
    for (auto it = v.factors().rbegin(); it != v.factors().rend(); ++it) {
      if (cur.is_trivial()) {
        break;
      }
      cur = verbal_subgroup(g, *it, cur, limits, opts);
    }
    return cur;
  }

  Subgroup verbal_subgroup(FiniteGroup const& g, Variety const& v, Limits const& limits,
                           VerbalOptions opts) {
    return verbal_subgroup(g, v, whole_group(g), limits, opts);
  }

  bool is_member(FiniteGroup const& g, Variety const& v, Limits const& limits) {
    if (!v.is_product()) {
      return !scan_basis(g, v, whole_group(g), limits, {}, true).nontrivial;
    }
    auto [n, q] = v.split();
    Subgroup inner = verbal_subgroup(g, q, limits);
    if (n.is_product()) {
      return verbal_subgroup(g, n, inner, limits).is_trivial();
    }
    return !scan_basis(g, n, inner, limits, {}, true).nontrivial;
  }

  bool disjoint_by_exponent(Variety const& a, Variety const& b) {
    auto ea = a.exponent();
    auto eb = b.exponent();
    if (!ea) {
      throw PreconditionError("variety " + a.name() + " has an undeclared exponent");
    }
    if (!eb) {
      throw PreconditionError("variety " + b.name() + " has an undeclared exponent");
    }
    return std::gcd(*ea, *eb) == 1;
  }

}  // namespace domkit
