#include "domkit/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>

#include "domkit/hom_search.hpp"
#include "domkit/io.hpp"
#include "domkit/products.hpp"
#include "domkit/standard.hpp"
#include "domkit/wreath.hpp"

namespace domkit {

  std::vector<Target> Catalog::targets() const {
    std::vector<Target> out;
    for (auto const& e : entries) {
      out.push_back(Target{e.group, e.provenance});
    }
    return out;
  }

  std::vector<Target> Catalog::targets(Variety const& v, std::size_t max_order, Limits const& limits) const {
    std::vector<Target> out;
    for (auto const& e : entries) {
      if (e.group->order() <= max_order && is_member(*e.group, v, limits)) {
        out.push_back(Target{e.group, e.provenance});
      }
    }
    return out;
  }

  namespace {

    class Builder {
     public:
      Builder(Variety const& v, std::size_t max_order, ConstructorSet const& cons, Limits const& limits,
              std::function<void(std::string const&)> const& log)
          : v_(v), max_(max_order), cons_(cons), limits_(limits), log_(log) {}

      Catalog run() {
        seed();
        for (unsigned round = 0; round < cons_.max_rounds; ++round) {
          std::size_t before = pool_.size();
          grow();
          if (pool_.size() == before) {
            break;
          }
        }
        std::stable_sort(pool_.begin(), pool_.end(), [](CatalogEntry const& a, CatalogEntry const& b) {
          if (a.group->order() != b.group->order()) {
            return a.group->order() < b.group->order();
          }
          return a.provenance < b.provenance;
        });
        return Catalog{v_, max_, std::move(pool_)};
      }

     private:
      void note(std::string const& msg) {
        if (log_) {
          log_(msg);
        }
      }

      void add(GroupPtr const& g, std::string const& prov) {
        if (g->order() > max_) {
          return;
        }
        if (!is_member(*g, v_, limits_)) {
          return;
        }
        for (std::size_t i : by_order_[g->order()]) {
          try {
            if (isomorphic(pool_[i].group, g, limits_)) {
              return;
            }
          } catch (LimitError const& e) {
            note("isomorphism test " + prov + " vs " + pool_[i].provenance + " gave up: " + e.what());
          }
        }
        by_order_[g->order()].push_back(pool_.size());
        pool_.push_back(CatalogEntry{g, prov, {{v_.name(), true}}});
      }

      template <class Fn>
      void attempt(std::string const& prov, Fn&& fn) {
        try {
          fn();
        } catch (LimitError const& e) {
          note("skipped " + prov + ": " + e.what());
        }
      }

      void seed() {
        if (cons_.cyclic) {
          for (std::size_t n = 1; n <= max_; ++n) {
            add(standard::cyclic(n), "C" + std::to_string(n));
          }
        }
        if (cons_.symmetric) {
          if (6 <= max_) {
            add(standard::symmetric(3), "S3");
          }
          if (12 <= max_) {
            add(standard::alternating(4), "A4");
          }
          if (24 <= max_) {
            add(standard::symmetric(4), "S4");
          }
        }
        if (cons_.dihedral) {
          for (std::size_t n = 3; 2 * n <= max_; ++n) {
            add(standard::dihedral(n), "D" + std::to_string(n));
          }
        }
        if (cons_.dicyclic) {
          for (std::size_t n = 2; 4 * n <= max_; ++n) {
            add(standard::dicyclic(n), n == 2 ? "Q8" : "Dic" + std::to_string(n));
          }
        }
      }

      std::optional<AutomorphismGroup> const& automorphisms_of(std::size_t i) {
        auto it = aut_.find(i);
        if (it != aut_.end()) {
          return it->second;
        }
        std::optional<AutomorphismGroup> a;
        Limits                           l = limits_;
        l.order_cap                        = cons_.automorphism_limit;
        try {
          a = automorphism_group(*pool_[i].group, l);
        } catch (LimitError const& e) {
          note("no semidirect products over " + pool_[i].provenance + ": " + e.what());
        }
        return aut_.emplace(i, std::move(a)).first->second;
      }

      void semidirects(std::size_t ni, std::size_t ki) {
        GroupPtr n = pool_[ni].group;
        GroupPtr k = pool_[ki].group;
        auto const& aut = automorphisms_of(ni);
        if (!aut) {
          return;
        }
        auto const& ag = *aut->group;
        // Actions K -> Aut(N), one per class under conjugation in Aut(N).
        std::set<std::vector<Elem>> seen;
        std::size_t                 count = 0;
        for (auto const& phi : enumerate_homs(k, aut->group, limits_)) {
          bool trivial = std::all_of(phi.image.begin(), phi.image.end(), [](Elem x) { return x == 0; });
          if (trivial) {
            continue;
          }
          std::vector<Elem> best;
          for (Elem a = 0; a < ag.order(); ++a) {
            std::vector<Elem> img(phi.image.size());
            for (std::size_t x = 0; x < img.size(); ++x) {
              img[x] = ag.conj(a, phi.image[x]);
            }
            if (best.empty() || img < best) {
              best = std::move(img);
            }
          }
          if (!seen.insert(best).second) {
            continue;
          }
          std::vector<Permutation> act;
          for (Elem x : phi.image) {
            act.push_back(aut->perms[x]);
          }
          std::string prov = "semidirect(" + pool_[ni].provenance + "," + pool_[ki].provenance + ",a"
                             + std::to_string(++count) + ")";
          attempt(prov, [&] { add(semidirect_product(n, k, act, limits_).group, prov); });
        }
      }

      void grow() {
        std::size_t size = pool_.size();
        for (std::size_t i = 0; i < size; ++i) {
          for (std::size_t j = 0; j < size; ++j) {
            GroupPtr    a  = pool_[i].group;
            GroupPtr    b  = pool_[j].group;
            std::size_t na = a->order(), nb = b->order();
            if (na == 1 || nb == 1 || !done_.insert({i, j}).second) {
              continue;
            }
            if (cons_.direct && i <= j && na * nb <= max_) {
              std::string prov = "direct(" + pool_[i].provenance + "," + pool_[j].provenance + ")";
              attempt(prov, [&] { add(direct_product(a, b, limits_).group, prov); });
            }
            if (cons_.semidirect && na * nb <= max_) {
              attempt("semidirect(" + pool_[i].provenance + "," + pool_[j].provenance + ")",
                      [&] { semidirects(i, j); });
            }
            if (cons_.wreath) {
              std::uint64_t order = nb;
              for (std::size_t w = 0; w < nb && order <= max_; ++w) {
                order *= na;
              }
              if (order <= max_) {
                std::string prov = "wreath(" + pool_[i].provenance + "," + pool_[j].provenance + ")";
                attempt(prov, [&] { add(regular_wreath(a, b, limits_).flat, prov); });
              }
            }
          }
        }
        if (cons_.quotient) {
          for (std::size_t i = 0; i < size; ++i) {
            if (!quotiented_.insert(i).second) {
              continue;
            }
            GroupPtr   g  = pool_[i].group;
            auto const ns = normal_subgroups(*g);
            for (std::size_t s = 0; s < ns.size(); ++s) {
              if (ns[s].order() == 1 || ns[s].order() == g->order()) {
                continue;
              }
              std::string prov = "quotient(" + pool_[i].provenance + "," + std::to_string(s) + ")";
              attempt(prov, [&] { add(quotient(g, ns[s], limits_).group, prov); });
            }
          }
        }
      }

      Variety const&                                 v_;
      std::size_t                                    max_;
      ConstructorSet const&                          cons_;
      Limits const&                                  limits_;
      std::function<void(std::string const&)> const& log_;
      std::vector<CatalogEntry>                      pool_;
      std::map<std::size_t, std::vector<std::size_t>> by_order_;
      std::map<std::size_t, std::optional<AutomorphismGroup>> aut_;
      std::set<std::pair<std::size_t, std::size_t>> done_;
      std::set<std::size_t>                          quotiented_;
    };

  }  // namespace

  Catalog build_catalog(Variety const& v, std::size_t max_order, ConstructorSet const& constructors,
                        Limits const& limits, std::function<void(std::string const&)> const& log) {
    return Builder(v, max_order, constructors, limits, log).run();
  }

  void save_catalog(Catalog const& c, std::filesystem::path const& dir) {
    std::filesystem::create_directories(dir);
    Json manifest;
    manifest["variety"]   = variety_to_json(c.variety);
    manifest["max_order"] = c.max_order;
    Json entries          = Json::array();
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      auto const& e    = c.entries[i];
      char        buf[32];
      std::snprintf(buf, sizeof buf, "g%04zu.json", i);
      save_group(*e.group, dir / buf);
      Json je;
      je["file"]        = buf;
      je["provenance"]  = e.provenance;
      je["order"]       = e.group->order();
      je["memberships"] = e.memberships;
      entries.push_back(std::move(je));
    }
    manifest["entries"] = std::move(entries);
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    if (!out) {
      throw ValidationError("cannot write " + (dir / "manifest.json").string());
    }
    out << manifest.dump(2) << "\n";
  }

  Catalog load_catalog(std::filesystem::path const& dir, Limits const& limits) {
    auto mpath = dir / "manifest.json";
    if (!std::filesystem::exists(mpath)) {
      throw ValidationError("catalog " + dir.string() + " has no manifest.json");
    }
    Json m;
    try {
      m = Json::parse(read_text(mpath));
    } catch (Json::parse_error const& e) {
      throw ValidationError(mpath.string() + ": " + e.what());
    }
    if (!m.contains("entries") || !m["entries"].is_array()) {
      throw ValidationError(mpath.string() + ": missing 'entries' list");
    }
    Catalog c;
    if (m.contains("variety")) {
      c.variety = variety_from_json(m["variety"], dir);
    }
    c.max_order = m.value("max_order", std::size_t{0});
    for (auto const& je : m["entries"]) {
      if (!je.contains("file") || !je["file"].is_string()) {
        throw ValidationError(mpath.string() + ": entry without a 'file'");
      }
      auto file = dir / je["file"].get<std::string>();
      if (!std::filesystem::exists(file)) {
        throw ValidationError("manifest references missing file " + file.string());
      }
      CatalogEntry e;
      e.group      = load_group(file);
      e.provenance = je.value("provenance", je["file"].get<std::string>());
      if (je.contains("memberships")) {
        for (auto const& [k, val] : je["memberships"].items()) {
          e.memberships[k] = val.get<bool>();
        }
      }
      c.entries.push_back(std::move(e));
    }
    for (auto const& e : c.entries) {
      bool member = is_member(*e.group, c.variety, limits);
      auto it     = e.memberships.find(c.variety.name());
      if (it != e.memberships.end() && it->second != member) {
        throw ValidationError("catalog entry " + e.provenance + " records membership "
                              + (it->second ? "true" : "false") + " in " + c.variety.name()
                              + " but the check says otherwise");
      }
      if (!member) {
        throw ValidationError("catalog entry " + e.provenance + " is not in the catalog variety "
                              + c.variety.name());
      }
    }
    return c;
  }

  void verify_catalog(Catalog const& c, Limits const& limits) {
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      auto const& e = c.entries[i];
      for (auto const& [name, claimed] : e.memberships) {
        if (name == c.variety.name() && claimed != is_member(*e.group, c.variety, limits)) {
          throw ValidationError("catalog entry " + e.provenance + ": cached membership in " + name
                                + " is wrong");
        }
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (isomorphic(c.entries[j].group, e.group, limits)) {
          throw ValidationError("catalog entries " + c.entries[j].provenance + " and " + e.provenance
                                + " are isomorphic");
        }
      }
    }
  }

}  // namespace domkit
