#include "domkit/hom_search.hpp"

#include <algorithm>
#include <numeric>

namespace domkit {

  namespace {

    constexpr Elem kUnset = static_cast<Elem>(-1);

    class Searcher {
     public:
      Searcher(FiniteGroup const& g, FiniteGroup const& c, HomSearchSpec const& spec,
               std::function<bool(std::span<Elem const>)> const& on_hom)
          : g_(g),
            c_(c),
            spec_(spec),
            on_hom_(on_hom),
            gens_(spec.generators.empty() ? g.generators() : spec.generators),
            map_(g.order(), kUnset),
            used_(spec.injective || spec.bijective ? c.order() : 0, 0),
            images_(gens_.size(), 0) {
        for (Elem s : gens_) {
          if (!g.valid(s)) {
            throw ValidationError("generator index " + std::to_string(s) + " out of range");
          }
        }
        for (Elem t : spec.forced) {
          if (!c.valid(t)) {
            throw ValidationError("forced image " + std::to_string(t) + " out of range");
          }
        }
        map_[0] = 0;
        mapped_.push_back(0);
        if (!used_.empty()) {
          used_[0] = 1;
        }
        candidates_.resize(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) {
          std::uint32_t o = g.element_order(gens_[i]);
          for (Elem t = 0; t < c.order(); ++t) {
            std::uint32_t ot = c.element_order(t);
            bool ok = spec.bijective ? ot == o : o % ot == 0;
            if (ok) {
              candidates_[i].push_back(t);
            }
          }
        }
      }

      void run() {
        if (spec_.bijective && g_.order() != c_.order()) {
          return;
        }
        recurse(0);
      }

     private:
      bool step(Elem x, std::size_t j) {
        Elem y = g_.mul(x, gens_[j]);
        Elem v = c_.mul(map_[x], images_[j]);
        if (map_[y] == kUnset) {
          if (!used_.empty()) {
            if (used_[v]) {
              return false;
            }
            used_[v] = 1;
          }
          map_[y] = v;
          mapped_.push_back(y);
          return true;
        }
        return map_[y] == v;
      }

      bool assign(std::size_t i) {
        std::size_t old = mapped_.size();
        for (std::size_t k = 0; k < old; ++k) {
          if (!step(mapped_[k], i)) {
            return false;
          }
        }
        for (std::size_t k = old; k < mapped_.size(); ++k) {
          for (std::size_t j = 0; j <= i; ++j) {
            if (!step(mapped_[k], j)) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (mapped_.size() > mark) {
          Elem y = mapped_.back();
          if (!used_.empty()) {
            used_[map_[y]] = 0;
          }
          map_[y] = kUnset;
          mapped_.pop_back();
        }
      }

      // Returns false when the consumer asked to stop.
      bool recurse(std::size_t i) {
        if (i == gens_.size()) {
          if (mapped_.size() != g_.order()) {
            throw PreconditionError("homomorphism search: generating sequence does not generate "
                                    "the domain");
          }
          return on_hom_(std::span<Elem const>(map_));
        }
        Elem              s = gens_[i];
        std::vector<Elem> single;
        std::vector<Elem> const* cand = &candidates_[i];
        if (i < spec_.forced.size()) {
          single = {spec_.forced[i]};
          cand   = &single;
        } else if (map_[s] != kUnset) {
          single = {map_[s]};
          cand   = &single;
        }
        for (Elem t : *cand) {
          if (++nodes_ > spec_.node_budget) {
            throw BudgetExhausted("homomorphism search exhausted its node budget of "
                                  + std::to_string(spec_.node_budget));
          }
          std::size_t mark = mapped_.size();
          images_[i]       = t;
          bool ok          = assign(i);
          bool cont        = true;
          if (ok) {
            cont = recurse(i + 1);
          }
          undo(mark);
          if (!cont) {
            return false;
          }
        }
        return true;
      }

      FiniteGroup const&                                g_;
      FiniteGroup const&                                c_;
      HomSearchSpec const&                              spec_;
      std::function<bool(std::span<Elem const>)> const& on_hom_;
      std::vector<Elem>                                 gens_;
      std::vector<Elem>                                 map_;
      std::vector<char>                                 used_;
      std::vector<Elem>                                 images_;
      std::vector<Elem>                                 mapped_;
      std::vector<std::vector<Elem>>                    candidates_;
      std::uint64_t                                     nodes_ = 0;
    };

  }  // namespace

  void search_homs(FiniteGroup const&                                g,
                   FiniteGroup const&                                c,
                   HomSearchSpec const&                              spec,
                   std::function<bool(std::span<Elem const>)> const& on_hom) {
    Searcher s(g, c, spec, on_hom);
    s.run();
  }

  std::optional<Homomorphism> isomorphic(GroupPtr const& a, GroupPtr const& b,
                                         Limits const& limits) {
    if (a->order() != b->order() || a->order_profile() != b->order_profile()
        || a->is_abelian() != b->is_abelian()) {
      return std::nullopt;
    }
    std::optional<Homomorphism> found;
    HomSearchSpec               spec;
    spec.bijective   = true;
    spec.node_budget = limits.node_budget;
    search_homs(*a, *b, spec, [&](std::span<Elem const> img) {
      found = Homomorphism{a, b, {img.begin(), img.end()}};
      return false;
    });
    return found;
  }

  std::vector<Elem> generators_extending(FiniteGroup const& g, Subgroup const& h) {
    std::vector<Elem> gens = greedy_generators(g, h.elements);
    Subgroup          cur  = closure(g, gens);
    if (cur.order() == g.order()) {
      return gens;
    }
    std::vector<Elem> cand(g.order());
    std::iota(cand.begin(), cand.end(), Elem(0));
    std::stable_sort(cand.begin(), cand.end(), [&g](Elem x, Elem y) {
      return g.element_order(x) > g.element_order(y);
    });
    for (Elem x : cand) {
      if (!cur.contains(x)) {
        gens.push_back(x);
        cur = closure(g, gens);
        if (cur.order() == g.order()) {
          break;
        }
      }
    }
    return gens;
  }

}  // namespace domkit
