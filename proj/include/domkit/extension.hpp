#ifndef DOMKIT_EXTENSION_HPP_
#define DOMKIT_EXTENSION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "domkit/group.hpp"
#include "domkit/wreath.hpp"

namespace domkit {

  // 1 -> A -> G -> B -> 1 with A realized as the normal subgroup `kernel`.
  struct ExtensionPresentation {
    GroupPtr     total;         // G
    Subgroup     kernel;        // α(A), normal in G
    GroupPtr     kernel_group;  // A; element i is kernel.elements[i]
    GroupPtr     quotient;      // B
    Homomorphism injection;     // α: A -> G
    Homomorphism projection;    // π: G -> B
  };

  // Builds the presentation from a normal subgroup (B = G/N with cosets
  // numbered by least element).
  ExtensionPresentation make_extension(GroupPtr const& g, Subgroup const& n, Limits const& limits = {});

  // Throws ValidationError unless α is injective, π surjective and
  // im α = ker π.
  void validate_extension(ExtensionPresentation const& ext);

  struct Transversal {
    GroupPtr          quotient;
    std::vector<Elem> lift;  // lift[b] in G with π(lift[b]) = b, lift[0] = e
    Homomorphism      projection;
  };

  // lift(identity coset) = e, otherwise the least element of each coset.
  // With a complement C (C ∩ N = {e}, CN = G) every lift is taken in C.
  Transversal default_transversal(ExtensionPresentation const& ext,
                                  std::optional<Subgroup> const& complement = std::nullopt);

  // A transversal with τ(N) = e, every τ(yN) in N_G(D), and
  // τ(y h^-1 N) = τ(yN) h'^-1 for some h' in H.  Built per orbit of the
  // action tN ↦ t h^-1 N; the orbit root takes the least element of its
  // coset inside N_G(D).  Requires D ⊆ N and H ⊆ N_G(D); throws
  // PreconditionError naming a coset that misses N_G(D).
  Transversal orbit_transversal(ExtensionPresentation const& ext, Subgroup const& h, Subgroup const& d);
  Transversal orbit_transversal(GroupPtr const& g, Subgroup const& n, Subgroup const& h,
                                Subgroup const& d, Limits const& limits = {});

  struct TransversalCheck {
    bool        section       = false;  // π(τ(b)) = b
    bool        identity_lift = false;  // τ(N) = e
    bool        in_normalizer = false;  // τ(yN) in N_G(D)
    bool        orbit_rule    = false;  // τ(y h^-1 N) in τ(yN) H
    std::string failure;

    bool ok() const noexcept {
      return section && identity_lift && in_normalizer && orbit_rule;
    }
  };

  // Brute-force check of the three properties, sharing no code with the
  // builder beyond the group table.
  TransversalCheck check_transversal(ExtensionPresentation const& ext, Transversal const& t,
                                     Subgroup const& h, Subgroup const& d);

  // γ(g) = (π(g), φ_g) with φ_g(y) = α^-1(τ(y π(g)^-1) g τ(y)^-1), as
  // elements of A ≀ B over the right regular action of B.
  WreathProduct              kk_wreath(ExtensionPresentation const& ext);
  std::vector<WreathElement> kk_images(ExtensionPresentation const& ext, Transversal const& t);

  struct KKEmbedding {
    WreathGroup  wreath;
    Homomorphism map;  // G -> wreath.flat
  };
  // Materializes A ≀ B; throws CapExceeded above the cap and
  // std::logic_error if γ fails to be an injective homomorphism.
  KKEmbedding kk_embedding(ExtensionPresentation const& ext, Transversal const& t,
                           Limits const& limits = {});

  // Exhaustive check over G×G of a symbolic map into a wreath product.
  bool is_symbolic_homomorphism(FiniteGroup const& g, WreathProduct const& w,
                                std::vector<WreathElement> const& images);

}  // namespace domkit

#endif  // DOMKIT_EXTENSION_HPP_
