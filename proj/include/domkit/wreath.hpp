#ifndef DOMKIT_WREATH_HPP_
#define DOMKIT_WREATH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "domkit/group.hpp"

namespace domkit {

  // A right action of a group on {0, ..., degree-1}: perms[k][w] = w·k, so
  // perms[g·h][w] = perms[h][perms[g][w]].
  struct GroupAction {
    GroupPtr                                group;
    std::size_t                             degree = 0;
    std::vector<std::vector<std::uint32_t>> perms;
  };

  // w·k = w k on the elements of k.
  GroupAction regular_action(GroupPtr const& k);

  // Points are the left cosets xH in the order of cosets(); w·g = g^-1 w.
  // The stabilizer of the point H (point 0) is H.
  GroupAction coset_action(GroupPtr const& g, Subgroup const& h);

  // Throws ValidationError if perms[e] is not the identity, some perms[k]
  // is not a permutation, or the right-action rule fails.
  void validate_action(GroupAction const& a);

  // Element (k, φ) of N ≀_Ω K with φ: Ω -> N stored as base[ω].
  struct WreathElement {
    Elem              top = 0;
    std::vector<Elem> base;
    friend bool operator==(WreathElement const&, WreathElement const&) = default;
  };

  struct WreathElementHash {
    std::size_t operator()(WreathElement const& x) const noexcept;
  };

  // Symbolic arithmetic in N ≀_Ω K:
  //   (k, φ)(ℓ, ψ) = (kℓ, φ^ℓ ψ),   φ^ℓ(ω) = φ(ω·ℓ^-1).
  class WreathProduct {
   public:
    WreathProduct(GroupPtr base, GroupAction action);

    GroupPtr const& base() const noexcept {
      return base_;
    }
    GroupPtr const& top() const noexcept {
      return action_.group;
    }
    GroupAction const& action() const noexcept {
      return action_;
    }
    std::size_t degree() const noexcept {
      return action_.degree;
    }
    // |K| · |N|^|Ω|, saturating at UINT64_MAX.
    std::uint64_t order() const noexcept;

    WreathElement identity() const;
    WreathElement mul(WreathElement const& a, WreathElement const& b) const;
    WreathElement inv(WreathElement const& a) const;
    WreathElement top_element(Elem k) const;
    // The base element supported on ω with value n.
    WreathElement coordinate(std::uint32_t omega, Elem n) const;

    // top·|N|^|Ω| + Σ base[ω]·|N|^ω; the identity encodes to 0.
    std::uint64_t encode(WreathElement const& x) const;
    WreathElement decode(std::uint64_t code) const;

    std::string label(WreathElement const& x) const;

   private:
    GroupPtr                                base_;
    GroupAction                             action_;
    // inverse_perm_[k] = perms[k^-1]
    std::vector<std::vector<std::uint32_t>> inverse_perm_;
  };

  // A wreath product with its full Cayley table.
  struct WreathGroup {
    WreathProduct product;
    GroupPtr      flat;          // element i encodes product.decode(i)
    Subgroup      base_subgroup; // N^Ω, normal in flat
    Homomorphism  top_embedding;  // K -> flat
    Homomorphism  top_projection; // flat -> K

    Elem          encode(WreathElement const& x) const;
    WreathElement decode(Elem i) const;
    // N -> flat, n ↦ the base element supported on ω with value n.
    Homomorphism  coordinate_embedding(std::uint32_t omega) const;
  };

  // Throws CapExceeded when |K|·|N|^|Ω| exceeds limits.order_cap.
  WreathGroup omega_wreath(GroupPtr const& n, GroupAction const& action, Limits const& limits = {});
  WreathGroup regular_wreath(GroupPtr const& n, GroupPtr const& k, Limits const& limits = {});

  // f*: (k, φ) ↦ (k, f∘φ) between wreaths over the same action.
  WreathElement induced_element(Homomorphism const& f, WreathElement const& x);
  Homomorphism  induced_map(Homomorphism const& f, WreathGroup const& source, WreathGroup const& target);

  struct InducedMap {
    WreathGroup  target;  // f.codomain ≀_Ω K over source's action
    Homomorphism map;
  };
  InducedMap induced_map(Homomorphism const& f, WreathGroup const& source, Limits const& limits = {});

  // The subgroup of a wreath product generated by some elements, made into
  // a group of its own without materializing the whole wreath product.
  struct WreathSubgroup {
    GroupPtr                   group;
    std::vector<WreathElement> elements;  // elements[i] is group element i
    std::unordered_map<WreathElement, Elem, WreathElementHash> index;

    Elem find(WreathElement const& x) const;
  };
  WreathSubgroup generate_in_wreath(WreathProduct const& w, std::vector<WreathElement> const& gens,
                                    Limits const& limits = {});

}  // namespace domkit

#endif  // DOMKIT_WREATH_HPP_
