#ifndef DOMKIT_STANDARD_HPP_
#define DOMKIT_STANDARD_HPP_

#include <string>
#include <vector>

#include "domkit/group.hpp"

// Small named groups used as seeds, test fixtures and CLI shortcuts.
namespace domkit::standard {

  GroupPtr trivial();
  // Labels e, c, c^2, ...
  GroupPtr cyclic(std::size_t n);
  // Order 2n; r^i s^j at index i + n j.  Labels r^i, r^i s.
  GroupPtr dihedral(std::size_t n);
  // Order 4n: <a, x | a^{2n}, x^2 = a^n, x a x^-1 = a^-1>.  dicyclic(2) = Q8.
  GroupPtr dicyclic(std::size_t n);
  // Permutations of {1..n} in lexicographic order, cycle-notation labels
  // such as "(12)" and "(123)".
  GroupPtr symmetric(std::size_t n);
  GroupPtr alternating(std::size_t n);
  // C_{m1} x C_{m2} x ...
  GroupPtr abelian(std::vector<std::size_t> const& invariants);

  // Group generated by permutations of {0..degree-1}; elements sorted
  // lexicographically with the identity first.
  GroupPtr permutation_group(std::size_t degree, std::vector<std::vector<std::uint32_t>> const& gens);

  // Parses names like "C4", "D4", "Q8", "Dic3", "S3", "A4", "V4", "C2xC4", "1".
  GroupPtr by_name(std::string const& name);

}  // namespace domkit::standard

#endif  // DOMKIT_STANDARD_HPP_
