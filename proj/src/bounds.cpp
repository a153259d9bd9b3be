#include "domkit/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "domkit/hom_search.hpp"
#include "domkit/products.hpp"
#include "domkit/standard.hpp"

namespace domkit {

  namespace {

    std::vector<Target> members_of(std::vector<Target> const& targets, Variety const& v, Limits const& limits) {
      std::vector<Target> out;
      for (auto const& t : targets) {
        if (is_member(*t.group, v, limits)) {
          out.push_back(t);
        }
      }
      return out;
    }

    bool disjoint_declared(Variety const& a, Variety const& b) {
      auto ea = a.exponent(), eb = b.exponent();
      return ea && eb && std::gcd(*ea, *eb) == 1;
    }

    // Shrinks `alive` by the equalizer of (f, g); true if anything went.
    bool shrink(std::vector<char>& alive, std::size_t& size, Homomorphism const& f, Homomorphism const& g) {
      bool removed = false;
      for (std::size_t x = 0; x < alive.size(); ++x) {
        if (alive[x] && f.image[x] != g.image[x]) {
          alive[x] = 0;
          --size;
          removed = true;
        }
      }
      return removed;
    }

    Subgroup from_mask(FiniteGroup const& g, std::vector<char> const& alive) {
      std::vector<Elem> elems;
      for (Elem x = 0; x < alive.size(); ++x) {
        if (alive[x]) {
          elems.push_back(x);
        }
      }
      return make_subgroup(g, std::move(elems));
    }

    constexpr std::size_t kWitnessTarget = static_cast<std::size_t>(-1);

    // Catalog approximation intersected with the witness equalizers, which
    // come first in the list of contributing pairs.
    ApproxResult approx_with_witnesses(GroupPtr const& g, Subgroup const& h, Variety const& v,
                                       std::vector<Target> const& targets,
                                       std::vector<WitnessRecord> const& witnesses,
                                       DominionApproximator const* approximator, Limits const& limits) {
      std::vector<char> alive(g->order(), 1);
      std::size_t       size = g->order();
      ApproxResult      out;
      for (auto const& w : witnesses) {
        if (shrink(alive, size, w.f, w.g)) {
          out.contributing_pairs.push_back(
              ContributingPair{kWitnessTarget, "witness:" + w.rule, w.f, w.g, w.equalizer});
        }
      }
      out.catalog_fingerprint = catalog_fingerprint(approximator ? approximator->targets() : targets);
      if (size == h.order()) {
        out.subgroup = from_mask(*g, alive);
        return out;
      }
      ApproxResult a;
      if (approximator) {
        a = approximator->approx(h);
      } else {
        a = DominionApproximator(g, targets, &v, limits).approx(h);
      }
      out.targets_examined = a.targets_examined;
      out.vacuous          = a.vacuous && witnesses.empty();
      for (auto const& p : a.contributing_pairs) {
        if (shrink(alive, size, p.f, p.g)) {
          out.contributing_pairs.push_back(p);
        }
      }
      out.subgroup = from_mask(*g, alive);
      if (!is_subset(h, out.subgroup)) {
        throw std::logic_error("approximation lost an element of H");
      }
      return out;
    }

  }  // namespace

  std::string to_string(Provenance p) {
    return p == Provenance::exact ? "exact" : "approximate";
  }

  std::string to_string(Status s) {
    switch (s) {
      case Status::certified_exact:
        return "certified_exact";
      case Status::sandwich:
        return "sandwich";
      case Status::candidate_nontrivial:
        return "candidate_nontrivial";
    }
    return "unknown";
  }

  InnerDominion inner_dominion(GroupPtr const& n, Subgroup const& k, Variety const& inner,
                               std::vector<Target> const& targets, Limits const& limits) {
    validate_subgroup(*n, k);
    if (k.order() == n->order()) {
      return {k, Provenance::exact, "whole", std::nullopt};
    }
    // Every subgroup of an abelian group is normal, and normal subgroups
    // are equalizers of the projection and the trivial map.
    if (inner.is_abelian()) {
      return {k, Provenance::exact, "abelian", std::nullopt};
    }
    if (is_normal(*n, k)) {
      return {k, Provenance::exact, "normal", std::nullopt};
    }
    ApproxResult a = dominion_upper_approx(n, k, nullptr, members_of(targets, inner, limits), limits);
    if (!a.vacuous && a.subgroup == k) {
      return {k, Provenance::exact, "approximation-closed", std::move(a)};
    }
    Subgroup s = a.subgroup;
    return {std::move(s), Provenance::approximate, "approximation", std::move(a)};
  }

  InnerDominion inner_dominion(GroupPtr const& g, Subgroup const& n, Subgroup const& k,
                               Variety const& inner, std::vector<Target> const& targets,
                               Limits const& limits) {
    if (!is_subset(k, n)) {
      throw PreconditionError("K = " + describe(*g, k) + " is not contained in N");
    }
    SubgroupGroup     sg = subgroup_as_group(g, n);
    std::vector<Elem> local;
    for (Elem x : k.elements) {
      local.push_back(sg.local(x));
    }
    std::sort(local.begin(), local.end());
    InnerDominion r = inner_dominion(sg.group, make_subgroup(*sg.group, std::move(local)), inner, targets,
                                     limits);
    r.subgroup = image_of(sg.inclusion, r.subgroup);
    return r;
  }

  Subgroup lower_bound(FiniteGroup const& g, Subgroup const& h, Subgroup const& d) {
    Subgroup nd = normalizer(g, d);
    for (Elem x : h.elements) {
      if (!nd.contains(x)) {
        throw PreconditionError("H does not normalize D: " + g.label(x) + " moves it");
      }
    }
    return join(g, h, d);
  }

  UpperBound upper_bound(FiniteGroup const& g, Subgroup const& h, Variety const& v, Limits const& limits) {
    auto [nv, qv] = v.split();
    UpperBound u;
    u.n        = verbal_subgroup(g, qv, limits);
    u.nh       = join(g, u.n, h);
    Subgroup k = intersection(g, h, u.n);
    u.d_prime  = normal_closure(g, k.elements);
    u.hd_prime = join(g, h, u.d_prime);
    u.upper    = u.hd_prime.order() <= u.nh.order() ? u.hd_prime : u.nh;
    return u;
  }

  std::optional<GroupPtr> nontrivial_member(Variety const& v, std::vector<Target> const& targets,
                                            Limits const& limits) {
    for (std::size_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
      auto c = standard::cyclic(p);
      if (is_member(*c, v, limits)) {
        return c;
      }
    }
    std::optional<GroupPtr> best;
    for (auto const& t : targets) {
      if (t.group->order() > 1 && (!best || t.group->order() < (*best)->order())
          && is_member(*t.group, v, limits)) {
        best = t.group;
      }
    }
    return best;
  }

  SandwichReport certify(GroupPtr const& g, Subgroup const& h, Variety const& v,
                         std::vector<Target> const& targets, CertifyOptions const& options,
                         Limits const& limits) {
    validate_subgroup(*g, h);
    if (!v.is_product()) {
      throw PreconditionError("certification needs a product variety, got " + v.name());
    }
    if (!is_member(*g, v, limits)) {
      throw PreconditionError("G is not in the variety " + v.name());
    }
    auto [nv, qv] = v.split();

    SandwichReport r;
    r.group   = g;
    r.h       = h;
    r.variety = v;

    std::vector<Target> inner_targets = members_of(targets, nv, limits);
    std::optional<GroupPtr> m         = nontrivial_member(nv, inner_targets, limits);
    r.kernel_nontrivial               = m.has_value();

    UpperBound ub = upper_bound(*g, h, v, limits);
    r.n           = ub.n;
    r.nh          = ub.nh;
    r.d_prime     = ub.d_prime;
    r.hd_prime    = ub.hd_prime;
    r.lower       = h;
    r.upper       = whole_group(*g);
    r.d           = intersection(*g, h, r.n);
    r.hd          = h;

    std::vector<std::pair<std::string, Subgroup>> certs;
    auto fire = [&](std::string const& rule, Subgroup const& s) {
      r.rules_fired.push_back(rule);
      certs.emplace_back(rule, s);
    };

    bool exact = false;
    bool transversal_applies = false;
    if (h.order() == g->order()) {
      fire("whole-group", h);
    }
    if (!r.kernel_nontrivial) {
      r.notes.push_back("no nontrivial member of " + nv.name() + " found; the product rules are skipped");
    } else {
      r.rules_fired.push_back("verbal-upper-bound");
      r.upper = ub.nh;
      if (ub.hd_prime.order() < ub.nh.order()) {
        r.rules_fired.push_back("normal-closure-upper");
        r.upper = ub.hd_prime;
      }
      if (r.n.is_trivial()) {
        fire("second-factor-mckay", h);
      }
      if (nv.evidently_contained_in(qv) && is_member(*g, nv, limits)) {
        if (!r.n.is_trivial()) {
          throw PreconditionError("declared containment of " + nv.name() + " in " + qv.name()
                                  + " is contradicted by G");
        }
        fire("contained-factors", h);
      }
      Subgroup k = intersection(*g, h, r.n);
      if (is_normal(*g, k)) {
        fire("normal-intersection", h);
      }

      InnerDominion id = inner_dominion(g, r.n, k, nv, inner_targets, limits);
      r.d              = id.subgroup;
      r.d_provenance   = id.provenance;
      r.d_reason       = id.reason;
      exact            = id.provenance == Provenance::exact;
      r.hd             = join(*g, h, r.d);
      if (exact) {
        r.lower = lower_bound(*g, h, r.d);
        r.rules_fired.push_back("lower-bound-hd");
      } else {
        r.notes.push_back("D is only approximate; the lower bound HD is not used");
      }

      bool disjoint = disjoint_declared(nv, qv);
      if (disjoint && exact && is_member(*g, nv, limits)) {
        fire("disjoint-factors", r.hd);
      }
      if (disjoint && is_member(*subgroup_as_group(g, h).group, qv, limits)) {
        fire("absolutely-closed", h);
      }
      if (exact) {
        Subgroup ndn        = join(*g, normalizer(*g, r.d), r.n);
        transversal_applies = ndn.order() == g->order();
        if (transversal_applies) {
          fire("transversal-witness", r.hd);
        } else {
          r.notes.push_back("N_G(D)N is a proper subgroup; the transversal construction does not apply");
        }
      }
    }
    if (exact && r.lower == r.upper) {
      fire("sandwich-closed", r.lower);
    }

    // Witnesses realizing the bounds inside the variety.
    if (r.kernel_nontrivial && options.witness_augmentation) {
      auto attempt = [&](std::string const& what, auto&& fn) {
        try {
          fn();
        } catch (LimitError const& e) {
          r.notes.push_back("witness " + what + " skipped: " + e.what());
        }
      };
      if (h.order() < g->order() && is_normal(*g, h)) {
        attempt("normal-subgroup", [&] {
          QuotientGroup q = quotient(g, h, limits);
          r.witnesses.push_back(WitnessRecord{"normal-subgroup", "projection onto G/H against the trivial map",
                                              q.group, false, q.projection, trivial_hom(g, q.group), h});
        });
      }
      if (ub.nh.order() < g->order()) {
        attempt("verbal-upper-bound", [&] {
          if (is_normal(*g, ub.nh)) {
            QuotientGroup q = quotient(g, ub.nh, limits);
            r.witnesses.push_back(WitnessRecord{"verbal-upper-bound",
                                                "projection onto G/NH against the trivial map", q.group,
                                                false, q.projection, trivial_hom(g, q.group), ub.nh});
          } else {
            QuotientGroup q  = quotient(g, r.n, limits);
            Subgroup      hq = image_of(q.projection, ub.nh);
            McKayWitness  mw = mckay_witness(q.group, hq, *m, &v, limits, options.witness_form);
            Homomorphism  f  = compose(mw.f, q.projection);
            Homomorphism  gg = compose(mw.g, q.projection);
            r.witnesses.push_back(WitnessRecord{"verbal-upper-bound",
                                                "McKay witness for NH/N in G/N, composed with the projection",
                                                mw.target, mw.compact, f, gg, equalizer(f, gg)});
          }
        });
      }
      if (ub.hd_prime.order() < ub.nh.order()) {
        attempt("normal-closure-upper", [&] {
          BigOneReport b = bigone_witness(g, ub.hd_prime, v, ub.d_prime, true, {}, limits, options.witness_form);
          if (b.status != WitnessStatus::certified) {
            throw std::logic_error("normal-closure witness failed: " + b.detail);
          }
          r.witnesses.push_back(WitnessRecord{"normal-closure-upper",
                                              "transversal witness for <H, D'> with D' normal in G", b.target,
                                              b.target_compact, b.f, b.g, b.equalizer});
        });
      }
      if (transversal_applies) {
        attempt("transversal-witness", [&] {
          BigOneReport b = bigone_witness(g, h, v, r.d, true, inner_targets, limits, options.witness_form);
          if (b.status == WitnessStatus::check_failed || b.status == WitnessStatus::hypothesis_failed) {
            throw std::logic_error("transversal witness failed: " + b.detail);
          }
          if (b.status == WitnessStatus::certified) {
            r.witnesses.push_back(WitnessRecord{"transversal-witness", "transversal witness for (H, D)",
                                                b.target, b.target_compact, b.f, b.g, b.equalizer});
          } else {
            r.notes.push_back("transversal witness: " + b.detail);
          }
          r.transversal_witness = std::move(b);
        });
      }
    }

    if (options.compute_approx) {
      r.approx = approx_with_witnesses(g, h, v, targets, r.witnesses, options.approximator, limits);
      if (!r.approx->vacuous && r.approx->subgroup == r.lower) {
        fire("approximation-meets-lower", r.lower);
      }
    }

    for (auto const& [rule, s] : certs) {
      if (!(s == certs.front().second)) {
        throw std::logic_error("rules " + certs.front().first + " and " + rule + " certify different subgroups: "
                               + describe(*g, certs.front().second) + " vs " + describe(*g, s));
      }
    }

    if (!certs.empty()) {
      r.dominion = certs.front().second;
      r.status   = Status::certified_exact;
      r.lower    = *r.dominion;
      r.upper    = *r.dominion;
      if (r.approx && !(r.approx->subgroup == *r.dominion)) {
        r.notes.push_back("approximation " + describe(*g, r.approx->subgroup)
                          + " is larger than the certified dominion");
      }
      return r;
    }

    if (r.approx && !r.approx->vacuous && r.approx->subgroup.order() > h.order()) {
      std::optional<ApproxResult> grown;
      if (options.growth_approximator) {
        grown = approx_with_witnesses(g, h, v, {}, r.witnesses, options.growth_approximator, limits);
      } else if (options.growth_targets) {
        grown = approx_with_witnesses(g, h, v, *options.growth_targets, r.witnesses, nullptr, limits);
      }
      if (grown) {
        r.stable_under_growth = grown->subgroup == r.approx->subgroup;
        if (*r.stable_under_growth) {
          r.status = Status::candidate_nontrivial;
          r.notes.push_back("candidate only: the approximation is an upper bound and is not certified");
        }
      }
    }
    return r;
  }

  ClosednessReport absolute_closedness_check(GroupPtr const& g, Variety const& v,
                                             std::vector<Target> const& overgroups, Limits const& limits) {
    if (!v.is_product()) {
      throw PreconditionError("absolute closedness needs a product variety, got " + v.name());
    }
    auto [nv, qv] = v.split();
    if (!disjoint_by_exponent(nv, qv)) {
      throw PreconditionError("the factors " + nv.name() + " and " + qv.name()
                              + " are not of coprime exponents");
    }
    if (!is_member(*g, qv, limits)) {
      throw PreconditionError("G is not in the quotient factor " + qv.name());
    }
    ClosednessReport out;
    CertifyOptions   opts;
    opts.compute_approx = false;
    for (auto const& k : overgroups) {
      if (k.group->order() % g->order() != 0 || !is_member(*k.group, v, limits)) {
        continue;
      }
      ++out.overgroups_examined;
      Subgroup              vq = verbal_subgroup(*k.group, qv, limits);
      std::vector<Subgroup> images;
      HomSearchSpec         spec;
      spec.injective   = true;
      spec.node_budget = limits.node_budget;
      search_homs(*g, *k.group, spec, [&](std::span<Elem const> img) {
        std::vector<Elem> e(img.begin(), img.end());
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        Subgroup s = make_subgroup(*k.group, std::move(e));
        if (std::find(images.begin(), images.end(), s) == images.end()) {
          images.push_back(std::move(s));
        }
        return true;
      });
      for (auto& img : images) {
        ClosednessEntry e;
        e.target_id              = k.id;
        e.meets_verbal_trivially = intersection(*k.group, img, vq).is_trivial();
        e.report                 = certify(k.group, img, v, {}, opts, limits);
        e.image                  = std::move(img);
        bool closed = e.report.status == Status::certified_exact && *e.report.dominion == e.image;
        if (!closed || !e.meets_verbal_trivially) {
          out.all_closed = false;
        }
        out.entries.push_back(std::move(e));
      }
    }
    return out;
  }

  std::vector<SandwichReport> hunt_candidates(Variety const& v, std::size_t max_order,
                                              std::vector<Target> const& groups,
                                              std::vector<Target> const& targets,
                                              std::vector<Target> const& growth_targets,
                                              Limits const& limits) {
    std::vector<SandwichReport> out;
    for (auto const& gt : groups) {
      GroupPtr const& g = gt.group;
      if (g->order() > max_order || !is_member(*g, v, limits)) {
        continue;
      }
      DominionApproximator base(g, targets, &v, limits);
      DominionApproximator grown(g, growth_targets, &v, limits);
      CertifyOptions       opts;
      opts.approximator        = &base;
      opts.growth_approximator = &grown;
      for (auto const& h : subgroup_class_representatives(*g)) {
        SandwichReport r = certify(g, h, v, targets, opts, limits);
        if (r.status != Status::candidate_nontrivial) {
          continue;
        }
        // Independent recomputation from the raw pairs.
        std::vector<char> alive(g->order(), 1);
        std::size_t       size = g->order();
        for (auto const& w : r.witnesses) {
          shrink(alive, size, w.f, w.g);
        }
        for (auto const& t : targets) {
          for (auto const& p : agreeing_pairs(g, t.group, h, limits, true)) {
            shrink(alive, size, p.f, p.g);
          }
        }
        if (!(from_mask(*g, alive) == r.approx->subgroup)) {
          throw std::logic_error("candidate for " + gt.id + " failed independent recomputation");
        }
        out.push_back(std::move(r));
      }
    }
    return out;
  }

}  // namespace domkit
