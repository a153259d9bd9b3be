#ifndef DOMKIT_CATALOG_HPP_
#define DOMKIT_CATALOG_HPP_

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "domkit/dominion.hpp"
#include "domkit/group.hpp"
#include "domkit/variety.hpp"

namespace domkit {

  struct CatalogEntry {
    GroupPtr                    group;
    std::string                 provenance;   // e.g. "semidirect(C3,C2,a1)"
    std::map<std::string, bool> memberships;  // variety name -> cached answer
  };

  struct Catalog {
    Variety                   variety = Variety::all_groups();
    std::size_t               max_order = 0;
    std::vector<CatalogEntry> entries;

    std::vector<Target> targets() const;
    // Entries of order at most n whose cached or recomputed membership in v
    // holds.
    std::vector<Target> targets(Variety const& v, std::size_t max_order, Limits const& limits = {}) const;
  };

  struct ConstructorSet {
    bool cyclic      = true;
    bool symmetric   = true;  // S3, S4 and A4 when small enough
    bool dihedral    = true;
    bool dicyclic    = true;  // Q8, Dic3, ...
    bool direct      = true;
    bool semidirect  = true;
    bool wreath      = true;
    bool quotient    = true;
    // Semidirect products are formed only over N with |Aut N| at most this.
    std::size_t automorphism_limit = 2000;
    unsigned    max_rounds         = 6;
  };

  // Seeds, then rounds of products, wreaths and quotients of the members
  // found so far until nothing new appears.  Only members of v are kept;
  // isomorphic duplicates keep the first construction found.  Entries are
  // sorted by (order, provenance).  Constructions that hit a limit are
  // skipped and reported through `log`.
  Catalog build_catalog(Variety const& v, std::size_t max_order, ConstructorSet const& constructors = {},
                        Limits const& limits = {},
                        std::function<void(std::string const&)> const& log = {});

  // Directory of group files plus manifest.json.
  void    save_catalog(Catalog const& c, std::filesystem::path const& dir);
  // Re-validates every table and every recorded membership in the
  // catalog's variety.
  Catalog load_catalog(std::filesystem::path const& dir, Limits const& limits = {});

  // Throws ValidationError naming the first entry whose cached membership
  // disagrees with a fresh check, or which is isomorphic to an earlier one.
  void verify_catalog(Catalog const& c, Limits const& limits = {});

}  // namespace domkit

#endif  // DOMKIT_CATALOG_HPP_
