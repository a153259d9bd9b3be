#include "domkit/dominion.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "domkit/hom_search.hpp"
#include "domkit/parallel.hpp"

namespace domkit {

  std::vector<Homomorphism> enumerate_homs(GroupPtr const& g, GroupPtr const& c, Limits const& limits) {
    std::vector<Homomorphism> out;
    HomSearchSpec             spec;
    spec.node_budget = limits.node_budget;
    search_homs(*g, *c, spec, [&](std::span<Elem const> img) {
      out.push_back(Homomorphism{g, c, {img.begin(), img.end()}});
      return true;
    });
    return out;
  }

  void for_each_agreeing_pair(GroupPtr const& g, GroupPtr const& c, Subgroup const& h,
                              std::function<bool(HomPair const&)> const& consumer,
                              Limits const& limits, bool ordered) {
    validate_subgroup(*g, h);
    std::vector<Elem> hgens = greedy_generators(*g, h.elements);
    HomSearchSpec     outer;
    outer.generators  = generators_extending(*g, h);
    outer.node_budget = limits.node_budget;
    bool stopped      = false;
    search_homs(*g, *c, outer, [&](std::span<Elem const> fimg) {
      HomSearchSpec inner = outer;
      for (Elem s : hgens) {
        inner.forced.push_back(fimg[s]);
      }
      Homomorphism f{g, c, {fimg.begin(), fimg.end()}};
      search_homs(*g, *c, inner, [&](std::span<Elem const> gimg) {
        if (!ordered && std::lexicographical_compare(gimg.begin(), gimg.end(), fimg.begin(), fimg.end())) {
          return true;
        }
        HomPair p{f, Homomorphism{g, c, {gimg.begin(), gimg.end()}}, h};
        if (!consumer(p)) {
          stopped = true;
          return false;
        }
        return true;
      });
      return !stopped;
    });
  }

  std::vector<HomPair> agreeing_pairs(GroupPtr const& g, GroupPtr const& c, Subgroup const& h,
                                      Limits const& limits, bool ordered) {
    std::vector<HomPair> out;
    for_each_agreeing_pair(
        g, c, h,
        [&](HomPair const& p) {
          out.push_back(p);
          return true;
        },
        limits, ordered);
    return out;
  }

  Subgroup equalizer(Homomorphism const& f, Homomorphism const& g) {
    if (f.domain->fingerprint() != g.domain->fingerprint()
        || f.codomain->fingerprint() != g.codomain->fingerprint()) {
      throw PreconditionError("equalizer: maps have different domains or codomains");
    }
    std::vector<Elem> e;
    for (Elem x = 0; x < f.image.size(); ++x) {
      if (f(x) == g(x)) {
        e.push_back(x);
      }
    }
    return make_subgroup(*f.domain, std::move(e));
  }

  Subgroup equalizer(HomPair const& p) {
    return equalizer(p.f, p.g);
  }

  std::uint64_t catalog_fingerprint(std::vector<Target> const& targets) {
    std::vector<std::uint64_t> fps;
    for (auto const& t : targets) {
      fps.push_back(t.group->fingerprint());
    }
    std::sort(fps.begin(), fps.end());
    std::uint64_t h = 1469598103934665603ULL;
    for (auto f : fps) {
      for (int i = 0; i < 8; ++i) {
        h = (h ^ ((f >> (8 * i)) & 0xFF)) * 1099511628211ULL;
      }
    }
    return h;
  }

  namespace {

    // Pairs (f0, f) that shrink a chain of intersections started from G.
    struct LocalChain {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::size_t                                      final_size = 0;
    };

    LocalChain local_chain(std::vector<Homomorphism> const& homs, std::size_t group_order,
                           std::vector<Elem> const& hgens, std::size_t h_order) {
      LocalChain                              out;
      std::vector<char>                       alive(group_order, 1);
      std::size_t                             size = group_order;
      std::map<std::vector<Elem>, std::size_t> first;
      std::vector<Elem>                       key(hgens.size());
      for (std::size_t i = 0; i < homs.size() && size > h_order; ++i) {
        for (std::size_t j = 0; j < hgens.size(); ++j) {
          key[j] = homs[i](hgens[j]);
        }
        auto [it, fresh] = first.emplace(key, i);
        if (fresh) {
          continue;
        }
        auto const& a       = homs[it->second].image;
        auto const& b       = homs[i].image;
        bool        removed = false;
        for (std::size_t x = 0; x < group_order; ++x) {
          if (alive[x] && a[x] != b[x]) {
            alive[x] = 0;
            --size;
            removed = true;
          }
        }
        if (removed) {
          out.pairs.emplace_back(it->second, i);
        }
      }
      out.final_size = size;
      return out;
    }

  }  // namespace

  DominionApproximator::DominionApproximator(GroupPtr g, std::vector<Target> targets, Variety const* v,
                                             Limits limits)
      : g_(std::move(g)), targets_(std::move(targets)), limits_(limits) {
    if (v != nullptr) {
      for (auto const& t : targets_) {
        if (!is_member(*t.group, *v, limits_)) {
          throw ValidationError("catalog member " + t.id + " is not in the variety " + v->name());
        }
      }
    }
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      slots_.push_back(std::make_unique<Slot>());
    }
  }

  std::vector<Homomorphism> const& DominionApproximator::homs(std::size_t i) const {
    Slot& s = *slots_[i];
    std::call_once(s.once, [&] { s.homs = enumerate_homs(g_, targets_[i].group, limits_); });
    return s.homs;
  }

  ApproxResult DominionApproximator::approx(Subgroup const& h) const {
    return approx(h, {});
  }

  ApproxResult DominionApproximator::approx(Subgroup const& h, std::vector<Target> const& extra) const {
    validate_subgroup(*g_, h);
    std::size_t       n     = g_->order();
    std::vector<Elem> hgens = greedy_generators(*g_, h.elements);
    std::size_t       total = extra.size() + targets_.size();

    std::vector<Target> all(extra);
    all.insert(all.end(), targets_.begin(), targets_.end());
    ApproxResult result;
    result.catalog_fingerprint = catalog_fingerprint(all);
    if (total == 0) {
      result.subgroup = whole_group(*g_);
      result.vacuous  = true;
      return result;
    }

    std::vector<std::vector<Homomorphism>> extra_homs(extra.size());
    auto homs_of = [&](std::size_t t) -> std::vector<Homomorphism> const& {
      if (t < extra.size()) {
        if (extra_homs[t].empty()) {
          extra_homs[t] = enumerate_homs(g_, extra[t].group, limits_);
        }
        return extra_homs[t];
      }
      return homs(t - extra.size());
    };

    std::vector<std::optional<LocalChain>> chains(total);
    std::atomic<bool>                      reached{false};
    std::mutex                             merge_mutex;
    std::vector<char>                      global(n, 1);
    std::size_t                            global_size = n;
    parallel_for(total, limits_.jobs, [&](std::size_t t) {
      if (reached.load()) {
        return;
      }
      auto const& hs = homs_of(t);
      LocalChain  c  = local_chain(hs, n, hgens, h.order());
      std::lock_guard<std::mutex> lock(merge_mutex);
      for (auto [i, j] : c.pairs) {
        for (std::size_t x = 0; x < n; ++x) {
          if (global[x] && hs[i].image[x] != hs[j].image[x]) {
            global[x] = 0;
            --global_size;
          }
        }
      }
      if (global_size == h.order()) {
        reached.store(true);
      }
      chains[t] = std::move(c);
    });

    // Serial merge in target order.
    std::vector<char> alive(n, 1);
    std::size_t       size = n;
    for (std::size_t t = 0; t < total && size > h.order(); ++t) {
      auto const& hs = homs_of(t);
      if (!chains[t]) {
        chains[t] = local_chain(hs, n, hgens, h.order());
      }
      ++result.targets_examined;
      for (auto [i, j] : chains[t]->pairs) {
        bool removed = false;
        for (std::size_t x = 0; x < n; ++x) {
          if (alive[x] && hs[i].image[x] != hs[j].image[x]) {
            alive[x] = 0;
            --size;
            removed = true;
          }
        }
        if (removed) {
          result.contributing_pairs.push_back(
              ContributingPair{t, all[t].id, hs[i], hs[j], equalizer(hs[i], hs[j])});
        }
      }
    }
    std::vector<Elem> elems;
    for (Elem x = 0; x < n; ++x) {
      if (alive[x]) {
        elems.push_back(x);
      }
    }
    result.subgroup = make_subgroup(*g_, std::move(elems));
    if (!is_subset(h, result.subgroup)) {
      throw std::logic_error("approximation lost an element of H");
    }
    return result;
  }

  ApproxResult dominion_upper_approx(GroupPtr const& g, Subgroup const& h, Variety const* v,
                                     std::vector<Target> const& targets, Limits const& limits) {
    return DominionApproximator(g, targets, v, limits).approx(h);
  }

}  // namespace domkit
