#ifndef DOMKIT_VARIETY_HPP_
#define DOMKIT_VARIETY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domkit/group.hpp"
#include "domkit/word.hpp"

namespace domkit {

  // A variety of groups given either by a finite law basis or as a product
  // V1 V2 ... Vk of other presentations (extensions of a V1-group by a
  // V2...Vk-group).  Values are cheap to copy.
  class Variety {
   public:
    // A basis with no laws is the variety of all groups.  The exponent is
    // the gcd of the declared one and of any laws literally of the form
    // xi^e.
    static Variety basis(std::string name, std::vector<Word> laws,
                         std::optional<std::uint64_t> exponent = std::nullopt,
                         bool declared_abelian = false);
    static Variety basis(std::string name, std::vector<std::string> const& laws,
                         std::optional<std::uint64_t> exponent = std::nullopt,
                         bool declared_abelian = false);
    // At least two factors; the leftmost is the variety of the kernel.
    static Variety product(std::string name, std::vector<Variety> factors);

    static Variety trivial();     // x1
    static Variety all_groups();  // no laws
    static Variety abelian();     // [x1,x2]
    static Variety metabelian();  // abelian · abelian
    // abelian of exponent e: [x1,x2], x1^e
    static Variety abelian_exponent(std::uint64_t e);

    std::string const& name() const noexcept {
      return name_;
    }
    bool is_product() const noexcept {
      return !factors_.empty();
    }
    std::vector<Word> const& laws() const noexcept {
      return laws_;
    }
    std::vector<Variety> const& factors() const noexcept {
      return factors_;
    }

    // Exponent as declared or read off literal power laws.  For a product,
    // the product of the factor exponents when every factor has one.
    std::optional<std::uint64_t> exponent() const;

    // True when a law is literally a commutator [xi,xj] with i != j or the
    // trivial law, the exponent is 1 or 2, or when declared.  Products are
    // never flagged.
    bool is_abelian() const noexcept {
      return abelian_;
    }

    // Names of varieties this one is declared to be contained in.
    std::vector<std::string> const& contained_in() const noexcept {
      return contained_in_;
    }
    Variety& declare_contained_in(std::string other);

    // Containment this <= other as far as it is evident without deriving
    // consequences of laws: equal names, a declaration, every law of other
    // literally among ours, one side being trivial/all, or factorwise for
    // products of the same length.
    bool evidently_contained_in(Variety const& other) const;

    // (N, Q) with V = N·Q: the leftmost factor and the product of the rest
    // (the single remaining factor when there are two).  Throws
    // PreconditionError for a basis.
    std::pair<Variety, Variety> split() const;

    // Deterministic one-line description, e.g. "metabelian = (abelian)(abelian)".
    std::string describe() const;

   private:
    std::string                  name_;
    std::vector<Word>            laws_;
    std::optional<std::uint64_t> exponent_;
    bool                         abelian_ = false;
    std::vector<Variety>         factors_;
    std::vector<std::string>     contained_in_;
  };

  struct VerbalOptions {
    // Let x1 range over conjugacy-class representatives of the ambient
    // subgroup only and take the normal closure of the values.  Gives the
    // same subgroup since the value set is closed under conjugation.
    bool class_representatives = true;
  };

  // V(W) for a subgroup W of g; for a product V1 V2 ... Vk this is
  // V1(V2(...Vk(W))).  Throws CapExceeded when a law would need more than
  // limits.tuple_budget evaluations.
  Subgroup verbal_subgroup(FiniteGroup const& g, Variety const& v, Subgroup const& within,
                           Limits const& limits = {}, VerbalOptions opts = {});
  Subgroup verbal_subgroup(FiniteGroup const& g, Variety const& v,
                           Limits const& limits = {}, VerbalOptions opts = {});

  // g in V  iff  V(g) = {e}.
  bool is_member(FiniteGroup const& g, Variety const& v, Limits const& limits = {});

  // gcd of the two exponents is 1.  Throws PreconditionError naming the
  // variety whose exponent is undeclared.
  bool disjoint_by_exponent(Variety const& a, Variety const& b);

}  // namespace domkit

#endif  // DOMKIT_VARIETY_HPP_
