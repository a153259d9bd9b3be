#ifndef DOMKIT_GROUP_HPP_
#define DOMKIT_GROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domkit/error.hpp"

namespace domkit {

  using Elem = std::uint32_t;

  class FiniteGroup;
  using GroupPtr = std::shared_ptr<FiniteGroup const>;

  // A finite group stored as its full Cayley table.  Element 0 is always the
  // identity; table(a, b) is the product a·b with a acting on the left.
  // Instances are immutable and only handed out through GroupPtr.
  class FiniteGroup {
   public:
    static constexpr Elem identity = 0;

    // Validates the table (closure, identity, inverses, associativity) and
    // re-indexes so that the identity becomes element 0.  Throws
    // ValidationError naming the failed axiom and a witness.
    static GroupPtr from_table(std::size_t                 order,
                               std::vector<Elem>           table,
                               std::vector<std::string>    labels     = {},
                               std::vector<Elem>           generators = {});

    // Nested-row convenience for tests and loaders.
    static GroupPtr from_rows(std::vector<std::vector<Elem>> const& rows,
                              std::vector<std::string> labels = {});

    std::size_t order() const noexcept {
      return order_;
    }

    Elem mul(Elem a, Elem b) const noexcept {
      return table_[static_cast<std::size_t>(a) * order_ + b];
    }

    Elem inv(Elem a) const noexcept {
      return inverses_[a];
    }

    Elem conj(Elem g, Elem x) const noexcept {
      return mul(mul(g, x), inv(g));
    }

    Elem pow(Elem a, std::int64_t e) const noexcept;

    std::span<Elem const> row(Elem a) const noexcept {
      return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
    }

    std::vector<Elem> const& table() const noexcept {
      return table_;
    }

    std::uint32_t element_order(Elem a) const noexcept {
      return orders_[a];
    }

    std::vector<std::uint32_t> const& element_orders() const noexcept {
      return orders_;
    }

    // Sorted multiset of element orders; isomorphism invariant.
    std::vector<std::uint32_t> order_profile() const;

    // Display label; falls back to "g<i>" when the group has none.
    std::string label(Elem a) const;
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    bool has_labels() const noexcept {
      return !labels_.empty();
    }
    std::optional<Elem> find_label(std::string_view lbl) const;

    // A generating set: the one supplied at construction if any, otherwise
    // chosen greedily by descending element order.
    std::vector<Elem> const& generators() const noexcept {
      return generators_;
    }

    bool is_abelian() const;
    bool is_trivial() const noexcept {
      return order_ == 1;
    }
    bool valid(Elem a) const noexcept {
      return a < order_;
    }

    // FNV-1a over the table; equal tables give equal fingerprints.
    std::uint64_t fingerprint() const noexcept {
      return fingerprint_;
    }

   private:
    FiniteGroup() = default;

    std::size_t              order_ = 0;
    std::vector<Elem>        table_;
    std::vector<Elem>        inverses_;
    std::vector<std::uint32_t> orders_;
    std::vector<std::string> labels_;
    std::vector<Elem>        generators_;
    std::uint64_t            fingerprint_ = 0;
  };

  // Exhaustive O(n^3) associativity check; returns a failing triple if any.
  std::optional<std::array<Elem, 3>>
  find_nonassociative_triple(FiniteGroup const& g);

  // A subgroup of some parent group: sorted element set plus a generating set.
  struct Subgroup {
    std::vector<Elem> elements;
    std::vector<Elem> generators;

    std::size_t order() const noexcept {
      return elements.size();
    }
    bool contains(Elem x) const;
    bool is_trivial() const noexcept {
      return elements.size() <= 1;
    }
    // Equality of element sets; generators are a witness, not identity.
    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a.elements == b.elements;
    }
  };

  bool is_subset(Subgroup const& a, Subgroup const& b);

  Subgroup trivial_subgroup();
  Subgroup whole_group(FiniteGroup const& g);

  // Smallest subgroup containing gens; generators of the result are gens.
  Subgroup closure(FiniteGroup const& g, std::span<Elem const> gens);
  Subgroup closure(FiniteGroup const& g, std::initializer_list<Elem> gens);

  // Wraps an element set already known to be a subgroup; picks generators
  // greedily by descending element order.  Throws if the set is not closed.
  Subgroup make_subgroup(FiniteGroup const& g, std::vector<Elem> elements);

  // Throws ValidationError unless h is a subgroup of g.
  void validate_subgroup(FiniteGroup const& g, Subgroup const& h);

  Subgroup normal_closure(FiniteGroup const& g, std::span<Elem const> s);
  Subgroup normalizer(FiniteGroup const& g, Subgroup const& h);
  Subgroup centralizer(FiniteGroup const& g, Elem x);
  bool     is_normal(FiniteGroup const& g, Subgroup const& h);
  Subgroup conjugate(FiniteGroup const& g, Elem x, Subgroup const& h);
  Subgroup intersection(FiniteGroup const& g, Subgroup const& a, Subgroup const& b);
  Subgroup join(FiniteGroup const& g, Subgroup const& a, Subgroup const& b);

  // Left cosets xH, each sorted, listed in order of their least element (so
  // H itself comes first).
  std::vector<std::vector<Elem>> cosets(FiniteGroup const& g, Subgroup const& h);

  // Every subgroup, ordered by (order, elements).
  std::vector<Subgroup> all_subgroups(FiniteGroup const& g);
  std::vector<Subgroup> normal_subgroups(FiniteGroup const& g);
  // One representative per conjugacy class of subgroups.
  std::vector<Subgroup> subgroup_class_representatives(FiniteGroup const& g);

  // Greedy generating set of a subgroup: repeatedly adds the element of
  // largest order not yet generated (ties by index).
  std::vector<Elem> greedy_generators(FiniteGroup const& g, std::span<Elem const> elements);

  std::uint64_t group_exponent(FiniteGroup const& g);

  // A total map between finite groups stored as an image array.
  struct Homomorphism {
    GroupPtr          domain;
    GroupPtr          codomain;
    std::vector<Elem> image;

    Elem operator()(Elem x) const noexcept {
      return image[x];
    }
    friend bool operator==(Homomorphism const& a, Homomorphism const& b) {
      return a.image == b.image;
    }
  };

  // Checks every pair x, y; returns the first failing pair if any.
  std::optional<std::pair<Elem, Elem>> find_hom_failure(Homomorphism const& f);
  bool is_homomorphism(Homomorphism const& f);

  // Validating constructor.
  Homomorphism make_homomorphism(GroupPtr dom, GroupPtr cod, std::vector<Elem> image);
  Homomorphism identity_hom(GroupPtr g);
  Homomorphism trivial_hom(GroupPtr dom, GroupPtr cod);
  // outer ∘ inner
  Homomorphism compose(Homomorphism const& outer, Homomorphism const& inner);

  Subgroup kernel(Homomorphism const& f);
  Subgroup image_of(Homomorphism const& f);
  Subgroup image_of(Homomorphism const& f, Subgroup const& h);
  Subgroup preimage(Homomorphism const& f, Subgroup const& k);
  bool     is_injective(Homomorphism const& f);
  bool     is_surjective(Homomorphism const& f);

  // A subgroup re-indexed as a group of its own, with the inclusion map.
  // Element i of the new group is h.elements[i].
  struct SubgroupGroup {
    GroupPtr     group;
    Homomorphism inclusion;
    Elem         local(Elem parent_elem) const;  // inverse of inclusion
  };
  SubgroupGroup subgroup_as_group(GroupPtr const& g, Subgroup const& h);

  std::string describe(FiniteGroup const& g, Subgroup const& h);

}  // namespace domkit

#endif  // DOMKIT_GROUP_HPP_
