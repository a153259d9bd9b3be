#ifndef DOMKIT_HOM_SEARCH_HPP_
#define DOMKIT_HOM_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "domkit/group.hpp"

namespace domkit {

  // Backtracking search for homomorphisms g -> c.  Images are assigned to a
  // generating sequence of g one generator at a time; after each assignment
  // the partial map is propagated along the Cayley graph (m(x s) = m(x) m(s))
  // and a clash with an already-mapped element prunes the branch.  Candidate
  // images must have order dividing the generator's order.
  struct HomSearchSpec {
    // Generating sequence of the domain.  Empty: the domain's own greedy
    // generators.  Must generate g.
    std::vector<Elem> generators;
    // Images for a prefix of `generators`, fixed rather than searched.
    std::vector<Elem> forced;
    bool              injective = false;
    // Injective and |g| = |c|; candidate orders must match exactly.
    bool              bijective   = false;
    std::uint64_t     node_budget = 10'000'000;
  };

  // Calls on_hom with each full image array; stop early by returning false.
  // Homomorphisms are produced in lexicographic order of the generator
  // images, each exactly once.  Throws BudgetExhausted if the node budget
  // is used up.
  void search_homs(FiniteGroup const&                                g,
                   FiniteGroup const&                                c,
                   HomSearchSpec const&                              spec,
                   std::function<bool(std::span<Elem const>)> const& on_hom);

  // A witness isomorphism a -> b, or nullopt.
  std::optional<Homomorphism> isomorphic(GroupPtr const& a, GroupPtr const& b,
                                         Limits const& limits = {});

  // A generating sequence that lists gens(h) first and then extends it to
  // all of g, both chosen greedily by descending element order.
  std::vector<Elem> generators_extending(FiniteGroup const& g, Subgroup const& h);

}  // namespace domkit

#endif  // DOMKIT_HOM_SEARCH_HPP_
