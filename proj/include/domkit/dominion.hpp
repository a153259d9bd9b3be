#ifndef DOMKIT_DOMINION_HPP_
#define DOMKIT_DOMINION_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "domkit/group.hpp"
#include "domkit/variety.hpp"

namespace domkit {

  // A homomorphism target: a group plus a stable identifier for reports.
  struct Target {
    GroupPtr    group;
    std::string id;
  };

  // Every homomorphism g -> c, in lexicographic order of the images of
  // g's generating sequence.
  std::vector<Homomorphism> enumerate_homs(GroupPtr const& g, GroupPtr const& c,
                                           Limits const& limits = {});

  struct HomPair {
    Homomorphism f, g;
    Subgroup     constraint;  // f and g agree here
  };

  // Pairs (f, g) of homomorphisms g -> c agreeing on h: f is enumerated,
  // then g is searched with the images of h's generators forced to f's.
  // Unordered by default (each {f, g} once, f <= g by image array); the
  // consumer stops the stream by returning false.
  void for_each_agreeing_pair(GroupPtr const& g, GroupPtr const& c, Subgroup const& h,
                              std::function<bool(HomPair const&)> const& consumer,
                              Limits const& limits = {}, bool ordered = false);
  std::vector<HomPair> agreeing_pairs(GroupPtr const& g, GroupPtr const& c, Subgroup const& h,
                                      Limits const& limits = {}, bool ordered = false);

  Subgroup equalizer(Homomorphism const& f, Homomorphism const& g);
  Subgroup equalizer(HomPair const& p);

  struct ContributingPair {
    std::size_t  target;  // index into the target list
    std::string  target_id;
    Homomorphism f, g;
    Subgroup     equalizer;
  };

  struct ApproxResult {
    Subgroup                      subgroup;
    std::vector<ContributingPair> contributing_pairs;
    std::uint64_t                 catalog_fingerprint = 0;
    bool                          vacuous             = false;  // no targets at all
    std::size_t                   targets_examined    = 0;
  };

  // Order-independent hash of the targets' tables.
  std::uint64_t catalog_fingerprint(std::vector<Target> const& targets);

  // Intersection of the equalizers of all pairs of homomorphisms g -> C
  // that agree on h, over every target C.  Homomorphisms into each target
  // are enumerated once and cached across queries.  Targets are processed
  // on up to limits.jobs threads; the result, including the list of
  // contributing pairs (those that strictly shrink the running
  // intersection in target order), does not depend on scheduling.
  class DominionApproximator {
   public:
    // With a variety, every target is checked for membership first and a
    // ValidationError names the first that fails.
    DominionApproximator(GroupPtr g, std::vector<Target> targets, Variety const* v = nullptr,
                         Limits limits = {});

    ApproxResult approx(Subgroup const& h) const;
    // Same, with additional targets consulted before the cached ones.  The
    // caller vouches for their membership.
    ApproxResult approx(Subgroup const& h, std::vector<Target> const& extra) const;

    GroupPtr const& group() const noexcept {
      return g_;
    }
    std::vector<Target> const& targets() const noexcept {
      return targets_;
    }

   private:
    struct Slot {
      std::once_flag            once;
      std::vector<Homomorphism> homs;
    };

    std::vector<Homomorphism> const& homs(std::size_t i) const;

    GroupPtr                           g_;
    std::vector<Target>                targets_;
    Limits                             limits_;
    std::vector<std::unique_ptr<Slot>> slots_;
  };

  ApproxResult dominion_upper_approx(GroupPtr const& g, Subgroup const& h, Variety const* v,
                                     std::vector<Target> const& targets, Limits const& limits = {});

}  // namespace domkit

#endif  // DOMKIT_DOMINION_HPP_
