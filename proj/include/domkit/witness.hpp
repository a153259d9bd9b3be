#ifndef DOMKIT_WITNESS_HPP_
#define DOMKIT_WITNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "domkit/dominion.hpp"
#include "domkit/extension.hpp"
#include "domkit/group.hpp"
#include "domkit/variety.hpp"
#include "domkit/wreath.hpp"

namespace domkit {

  // How a witness group sitting inside a wreath product is materialized.
  enum class WitnessForm {
    full,       // the whole wreath product; CapExceeded above the cap
    compact,    // only the subgroup generated by the images of both maps
    automatic,  // full up to order 2048 and under the cap, compact otherwise
  };

  // Two homomorphisms G -> K whose equalizer is H, with K in the variety.
  struct McKayWitness {
    WreathProduct  wreath;          // M ≀_{G/H} G over the left-coset action
    GroupPtr       target;          // K
    bool           compact = false; // K is a proper generated subgroup of the wreath
    Homomorphism   f, g;            // f: top embedding, g: conjugation by n after f
    WreathElement  n;               // supported on the coset H only
    Subgroup       equalizer;
  };

  // Requires M nontrivial and, when v is given, G in the quotient factor
  // and M in the kernel factor of v (PreconditionError otherwise).  The
  // equalizer is checked to be exactly H and, with v, K to lie in v; a
  // failure there throws std::logic_error.
  McKayWitness mckay_witness(GroupPtr const& g, Subgroup const& h, GroupPtr const& m,
                             Variety const* v = nullptr, Limits const& limits = {},
                             WitnessForm form = WitnessForm::automatic);

  // Two maps N -> M into a member of `inner` agreeing exactly on D.
  struct SeparationResult {
    bool              found = false;
    std::string       strategy;  // "whole", "quotient", "catalog", "diagonal"
    GroupPtr          m;
    Homomorphism      lambda, rho;
    std::vector<std::string> targets_used;
    std::vector<Elem> unseparated;  // elements outside D no pair told apart
  };

  // D = N: the trivial group.  D normal with N/D in `inner`: projection
  // against the trivial map.  Otherwise pairs into catalog members of
  // `inner` agreeing on D, taken singly when one has equalizer exactly D,
  // else combined diagonally into a direct product.
  SeparationResult separating_pair(GroupPtr const& n, Subgroup const& d, Variety const& inner,
                                   std::vector<Target> const& targets, Limits const& limits = {});

  enum class WitnessStatus {
    certified,          // dom = HD
    upper_bound_only,   // dom ⊆ HD shown but D is not known to be exact
    hypothesis_failed,  // N_G(D) N != G or H does not normalize D
    no_separating_pair,
    check_failed,
  };
  std::string to_string(WitnessStatus s);

  // The pipeline two maps G -> M ≀ (G/N): the Kaloujnine-Krasner embedding
  // for an orbit transversal, followed by the maps induced by a separating
  // pair for D in N.
  struct BigOneReport {
    WitnessStatus status = WitnessStatus::check_failed;
    std::string   detail;

    Subgroup n;   // the verbal subgroup of the quotient factor
    Subgroup d;
    bool     d_exact = false;
    Subgroup hd;  // ⟨H, D⟩

    std::optional<ExtensionPresentation> extension;
    std::optional<Transversal>           transversal;
    TransversalCheck                     transversal_check;
    std::vector<WreathElement>           gamma;  // γ(x) in N ≀ (G/N)
    std::optional<SeparationResult>      separation;

    std::optional<WreathProduct> wreath;  // M ≀ (G/N)
    GroupPtr                     target;
    bool                         target_compact = false;
    bool                         target_in_variety = false;
    Homomorphism                 f, g;  // λ̃*∘γ and ρ̃*∘γ
    Subgroup                     equalizer;
    bool                         agree_on_h = false;
    bool                         meets_n_in_d = false;  // equalizer ∩ N = D
    Subgroup                     upper;  // equalizer ∩ NH when the checks pass
  };

  // `v` must be a product; D must lie in N.  `inner_targets` feed the
  // catalog branch of separating_pair.
  BigOneReport bigone_witness(GroupPtr const& g, Subgroup const& h, Variety const& v, Subgroup const& d,
                              bool d_exact, std::vector<Target> const& inner_targets,
                              Limits const& limits = {}, WitnessForm form = WitnessForm::automatic);

}  // namespace domkit

#endif  // DOMKIT_WITNESS_HPP_
