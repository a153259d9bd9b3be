#ifndef DOMKIT_BOUNDS_HPP_
#define DOMKIT_BOUNDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "domkit/dominion.hpp"
#include "domkit/group.hpp"
#include "domkit/variety.hpp"
#include "domkit/witness.hpp"

namespace domkit {

  enum class Provenance { exact, approximate };
  std::string to_string(Provenance p);

  struct InnerDominion {
    Subgroup                    subgroup;
    Provenance                  provenance = Provenance::approximate;
    std::string                 reason;  // whole, abelian, normal, approximation-closed, approximation
    std::optional<ApproxResult> approx;
  };

  // The dominion of K in the group n within `inner`.  Exact when K = n,
  // when `inner` is flagged abelian, when K is normal in n, or when the
  // catalog approximation already equals K; otherwise the approximation.
  // Targets outside `inner` are ignored.
  InnerDominion inner_dominion(GroupPtr const& n, Subgroup const& k, Variety const& inner,
                               std::vector<Target> const& targets, Limits const& limits = {});
  // Same with N given as a subgroup of g; the result lives in g.
  InnerDominion inner_dominion(GroupPtr const& g, Subgroup const& n, Subgroup const& k,
                               Variety const& inner, std::vector<Target> const& targets,
                               Limits const& limits = {});

  // ⟨H, D⟩, which equals HD; throws PreconditionError when H does not
  // normalize D.
  Subgroup lower_bound(FiniteGroup const& g, Subgroup const& h, Subgroup const& d);

  struct UpperBound {
    Subgroup n;        // verbal subgroup of the quotient factor
    Subgroup nh;       // NH
    Subgroup d_prime;  // normal closure of H ∩ N
    Subgroup hd_prime; // ⟨H, D'⟩
    Subgroup upper;    // the smaller of the two
  };
  // v must be a product.
  UpperBound upper_bound(FiniteGroup const& g, Subgroup const& h, Variety const& v,
                         Limits const& limits = {});

  // A nontrivial member of v: the least prime order cyclic group up to 47
  // that satisfies v, else the smallest nontrivial target in v.
  std::optional<GroupPtr> nontrivial_member(Variety const& v, std::vector<Target> const& targets = {},
                                            Limits const& limits = {});

  enum class Status { certified_exact, sandwich, candidate_nontrivial };
  std::string to_string(Status s);

  struct WitnessRecord {
    std::string  rule;
    std::string  description;
    GroupPtr     target;
    bool         compact = false;
    Homomorphism f, g;
    Subgroup     equalizer;
  };

  struct SandwichReport {
    GroupPtr group;
    Subgroup h;
    Variety  variety = Variety::all_groups();

    Subgroup    n;
    bool        kernel_nontrivial = false;
    Subgroup    d;
    Provenance  d_provenance = Provenance::approximate;
    std::string d_reason;
    Subgroup    hd, nh, d_prime, hd_prime;

    Subgroup lower, upper;
    std::optional<ApproxResult> approx;
    std::optional<bool>         stable_under_growth;
    std::optional<Subgroup>     dominion;

    Status                     status = Status::sandwich;
    std::vector<std::string>   rules_fired;
    std::vector<std::string>   notes;
    std::vector<WitnessRecord> witnesses;
    std::optional<BigOneReport> transversal_witness;
  };

  struct CertifyOptions {
    bool        compute_approx       = true;
    bool        witness_augmentation = true;
    WitnessForm witness_form         = WitnessForm::compact;
    // A larger catalog consulted when deciding candidate_nontrivial.
    std::optional<std::vector<Target>> growth_targets;
    // Reused across queries on the same group when given.
    DominionApproximator const* approximator        = nullptr;
    DominionApproximator const* growth_approximator = nullptr;
  };

  // Requires G in v (PreconditionError otherwise) and v a product.  Every
  // applicable rule is fired and recorded; rules that certify must agree
  // (std::logic_error otherwise).  targets must lie in v.
  SandwichReport certify(GroupPtr const& g, Subgroup const& h, Variety const& v,
                         std::vector<Target> const& targets, CertifyOptions const& options = {},
                         Limits const& limits = {});

  struct ClosednessEntry {
    std::string    target_id;
    Subgroup       image;  // an embedded copy of G in the target
    bool           meets_verbal_trivially = false;
    SandwichReport report;
  };
  struct ClosednessReport {
    std::vector<ClosednessEntry> entries;
    std::size_t                  overgroups_examined = 0;
    bool                         all_closed          = true;
  };

  // G in the quotient factor, factors of coprime declared exponents.  For
  // every target K in v and every image of an embedding G -> K, the
  // dominion of the image in K is certified equal to it.
  ClosednessReport absolute_closedness_check(GroupPtr const& g, Variety const& v,
                                             std::vector<Target> const& overgroups,
                                             Limits const& limits = {});

  // Subgroup class representatives H of every group in `groups` in v of
  // order at most max_order whose certify report is candidate_nontrivial.
  // Each survivor's approximation is recomputed independently from the
  // raw agreeing pairs and must match.
  std::vector<SandwichReport> hunt_candidates(Variety const& v, std::size_t max_order,
                                              std::vector<Target> const& groups,
                                              std::vector<Target> const& targets,
                                              std::vector<Target> const& growth_targets,
                                              Limits const& limits = {});

}  // namespace domkit

#endif  // DOMKIT_BOUNDS_HPP_
