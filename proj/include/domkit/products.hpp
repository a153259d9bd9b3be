#ifndef DOMKIT_PRODUCTS_HPP_
#define DOMKIT_PRODUCTS_HPP_

#include <string>
#include <vector>

#include "domkit/group.hpp"

namespace domkit {

  struct QuotientGroup {
    GroupPtr     group;
    Homomorphism projection;  // G -> G/N, surjective with kernel N
    // representatives[i] is the least element of coset i
    std::vector<Elem> representatives;
  };

  // Cosets are numbered by least element, so N itself is coset 0.
  QuotientGroup quotient(GroupPtr const& g, Subgroup const& n, Limits const& limits = {});

  struct DirectProduct {
    GroupPtr     group;
    Homomorphism inject_left, inject_right;
    Homomorphism project_left, project_right;
    // (a, b) is stored at index a * |right| + b
    Elem pair(Elem a, Elem b) const {
      return a * static_cast<Elem>(inject_right.domain->order()) + b;
    }
  };

  DirectProduct direct_product(GroupPtr const& left, GroupPtr const& right,
                               Limits const& limits = {});

  // Automorphisms of N are permutations of its element indices.
  using Permutation = std::vector<Elem>;

  // One permutation of N per element of K; must be a homomorphism K -> Aut(N).
  struct SemidirectProduct {
    GroupPtr     group;
    Homomorphism inject_normal;      // N -> N ⋊ K
    Homomorphism inject_complement;  // K -> N ⋊ K
    Homomorphism project_complement; // N ⋊ K -> K
    // (n, k) is stored at index n * |K| + k
  };

  // Elements are pairs (n, k) with (n1, k1)(n2, k2) = (n1 · act[k1](n2), k1 k2).
  // Throws PreconditionError if some act[k] is not an automorphism or k ↦ act[k]
  // is not a homomorphism.
  SemidirectProduct semidirect_product(GroupPtr const&                 n,
                                       GroupPtr const&                 k,
                                       std::vector<Permutation> const& act,
                                       Limits const&                   limits = {});

  // Every automorphism of g, identity first, then in lexicographic order.
  std::vector<Permutation> automorphisms(FiniteGroup const& g, Limits const& limits = {});

  // The automorphisms as a group under composition ((a*b)(x) = a(b(x))),
  // together with the permutations indexed like its elements.
  struct AutomorphismGroup {
    GroupPtr                 group;
    std::vector<Permutation> perms;
  };
  AutomorphismGroup automorphism_group(FiniteGroup const& g, Limits const& limits = {});

  bool is_automorphism(FiniteGroup const& g, Permutation const& p);

}  // namespace domkit

#endif  // DOMKIT_PRODUCTS_HPP_
