#include "domkit/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "domkit/products.hpp"
#include "domkit/standard.hpp"

namespace domkit {

  namespace {

    // Automatic form materializes whole wreath products only up to this.
    constexpr std::uint64_t kMaterializeLimit = 2048;

    std::vector<Elem> generators_of(FiniteGroup const& g) {
      auto all = whole_group(g);
      return greedy_generators(g, all.elements);
    }

    bool use_full(WreathProduct const& w, WitnessForm form, Limits const& limits) {
      switch (form) {
        case WitnessForm::full:
          return true;
        case WitnessForm::compact:
          return false;
        case WitnessForm::automatic:
          break;
      }
      return w.order() <= std::min<std::uint64_t>(limits.order_cap, kMaterializeLimit);
    }

    // Realizes two symbolic maps G -> w as homomorphisms into a concrete
    // group, either the whole wreath product or the generated subgroup.
    struct Realized {
      GroupPtr     target;
      bool         compact = false;
      Homomorphism f, g;
    };

    Realized realize(GroupPtr const& g, WreathProduct const& w, std::vector<WreathElement> const& fi,
                     std::vector<WreathElement> const& gi, WitnessForm form, Limits const& limits) {
      Realized r;
      std::vector<Elem> fimg(g->order()), gimg(g->order());
      if (use_full(w, form, limits)) {
        WreathGroup wg = omega_wreath(w.base(), w.action(), limits);
        for (Elem x = 0; x < g->order(); ++x) {
          fimg[x] = wg.encode(fi[x]);
          gimg[x] = wg.encode(gi[x]);
        }
        r.target = wg.flat;
      } else {
        std::vector<WreathElement> gens;
        for (Elem s : generators_of(*g)) {
          gens.push_back(fi[s]);
          gens.push_back(gi[s]);
        }
        WreathSubgroup sub = generate_in_wreath(w, gens, limits);
        for (Elem x = 0; x < g->order(); ++x) {
          fimg[x] = sub.find(fi[x]);
          gimg[x] = sub.find(gi[x]);
        }
        r.target  = sub.group;
        r.compact = sub.group->order() < w.order();
      }
      r.f = Homomorphism{g, r.target, std::move(fimg)};
      r.g = Homomorphism{g, r.target, std::move(gimg)};
      return r;
    }

    std::string element_list(FiniteGroup const& g, std::vector<Elem> const& xs, std::size_t limit = 8) {
      std::string s;
      for (std::size_t i = 0; i < xs.size() && i < limit; ++i) {
        s += (i ? ", " : "") + g.label(xs[i]);
      }
      if (xs.size() > limit) {
        s += ", ...";
      }
      return s;
    }

  }  // namespace

  McKayWitness mckay_witness(GroupPtr const& g, Subgroup const& h, GroupPtr const& m, Variety const* v,
                             Limits const& limits, WitnessForm form) {
    validate_subgroup(*g, h);
    if (m->order() == 1) {
      throw PreconditionError("the witness group M must be nontrivial");
    }
    if (v) {
      auto [nv, qv] = v->split();
      if (!is_member(*g, qv, limits)) {
        throw PreconditionError("G is not in the quotient factor " + qv.name());
      }
      if (!is_member(*m, nv, limits)) {
        throw PreconditionError("M is not in the kernel factor " + nv.name());
      }
    }
    WreathProduct w(m, coset_action(g, h));
    // Point 0 is the coset H itself; the value is the first nonidentity of M.
    WreathElement n    = w.coordinate(0, 1);
    WreathElement ninv = w.inv(n);
    std::vector<WreathElement> fi, gi;
    for (Elem x = 0; x < g->order(); ++x) {
      fi.push_back(w.top_element(x));
      gi.push_back(w.mul(w.mul(n, fi.back()), ninv));
    }
    Realized r = realize(g, w, fi, gi, form, limits);
    McKayWitness out{w, r.target, r.compact, r.f, r.g, n, equalizer(r.f, r.g)};
    if (!is_homomorphism(out.f) || !is_homomorphism(out.g)) {
      throw std::logic_error("McKay witness maps fail to be homomorphisms");
    }
    if (!(out.equalizer == h)) {
      throw std::logic_error("McKay witness equalizer " + describe(*g, out.equalizer) + " differs from H");
    }
    if (v && !is_member(*out.target, *v, limits)) {
      throw std::logic_error("McKay witness group lies outside " + v->name());
    }
    return out;
  }

  SeparationResult separating_pair(GroupPtr const& n, Subgroup const& d, Variety const& inner,
                                   std::vector<Target> const& targets, Limits const& limits) {
    validate_subgroup(*n, d);
    SeparationResult r;
    if (d.order() == n->order()) {
      r.found    = true;
      r.strategy = "whole";
      r.m        = standard::trivial();
      r.lambda   = trivial_hom(n, r.m);
      r.rho      = r.lambda;
      return r;
    }
    if (is_normal(*n, d)) {
      QuotientGroup q = quotient(n, d, limits);
      if (is_member(*q.group, inner, limits)) {
        r.found    = true;
        r.strategy = "quotient";
        r.m        = q.group;
        r.lambda   = q.projection;
        r.rho      = trivial_hom(n, q.group);
        return r;
      }
    }

    // alive[x]: every pair kept so far agrees at x.
    std::vector<char> alive(n->order(), 1);
    std::size_t       alive_count = n->order();
    struct Kept {
      Target       target;
      Homomorphism f, g;
    };
    std::vector<Kept>   kept;
    std::optional<Kept> single;
    for (auto const& t : targets) {
      if (!is_member(*t.group, inner, limits)) {
        continue;
      }
      for_each_agreeing_pair(
          n, t.group, d,
          [&](HomPair const& p) {
            Subgroup e = equalizer(p);
            if (e == d) {
              single = Kept{t, p.f, p.g};
              return false;
            }
            bool shrinks = false;
            for (Elem x = 0; x < n->order(); ++x) {
              if (alive[x] && !e.contains(x)) {
                alive[x] = 0;
                --alive_count;
                shrinks = true;
              }
            }
            if (shrinks) {
              kept.push_back(Kept{t, p.f, p.g});
            }
            return alive_count > d.order();
          },
          limits);
      if (single || alive_count == d.order()) {
        break;
      }
    }
    if (single) {
      r.found    = true;
      r.strategy = "catalog";
      r.m        = single->target.group;
      r.lambda   = single->f;
      r.rho      = single->g;
      r.targets_used.push_back(single->target.id);
      return r;
    }
    if (alive_count == d.order() && !kept.empty()) {
      GroupPtr          m = kept[0].target.group;
      std::vector<Elem> lam = kept[0].f.image, rho = kept[0].g.image;
      r.targets_used.push_back(kept[0].target.id);
      for (std::size_t i = 1; i < kept.size(); ++i) {
        auto          c  = kept[i].target.group;
        DirectProduct dp = direct_product(m, c, limits);
        for (Elem x = 0; x < n->order(); ++x) {
          lam[x] = lam[x] * static_cast<Elem>(c->order()) + kept[i].f.image[x];
          rho[x] = rho[x] * static_cast<Elem>(c->order()) + kept[i].g.image[x];
        }
        m = dp.group;
        r.targets_used.push_back(kept[i].target.id);
      }
      r.found    = true;
      r.strategy = "diagonal";
      r.m        = m;
      r.lambda   = Homomorphism{n, m, std::move(lam)};
      r.rho      = Homomorphism{n, m, std::move(rho)};
      if (!(equalizer(r.lambda, r.rho) == d)) {
        throw std::logic_error("diagonal separating pair does not agree exactly on D");
      }
      return r;
    }
    for (Elem x = 0; x < n->order(); ++x) {
      if (alive[x] && !d.contains(x)) {
        r.unseparated.push_back(x);
      }
    }
    return r;
  }

  std::string to_string(WitnessStatus s) {
    switch (s) {
      case WitnessStatus::certified:
        return "certified";
      case WitnessStatus::upper_bound_only:
        return "upper_bound_only";
      case WitnessStatus::hypothesis_failed:
        return "hypothesis_failed";
      case WitnessStatus::no_separating_pair:
        return "no_separating_pair";
      case WitnessStatus::check_failed:
        return "check_failed";
    }
    return "unknown";
  }

  BigOneReport bigone_witness(GroupPtr const& g, Subgroup const& h, Variety const& v, Subgroup const& d,
                              bool d_exact, std::vector<Target> const& inner_targets, Limits const& limits,
                              WitnessForm form) {
    validate_subgroup(*g, h);
    validate_subgroup(*g, d);
    auto [nv, qv] = v.split();
    BigOneReport r;
    r.n       = verbal_subgroup(*g, qv, limits);
    r.d       = d;
    r.d_exact = d_exact;
    if (!is_subset(d, r.n)) {
      throw PreconditionError("D = " + describe(*g, d) + " is not contained in N = " + describe(*g, r.n));
    }
    r.hd = join(*g, h, d);

    Subgroup nd = normalizer(*g, d);
    if (!is_subset(h, nd)) {
      r.status = WitnessStatus::hypothesis_failed;
      for (Elem x : h.elements) {
        if (!nd.contains(x)) {
          r.detail = "H does not normalize D: " + g->label(x) + " moves it";
          break;
        }
      }
      return r;
    }
    Subgroup ndn = join(*g, nd, r.n);
    if (ndn.order() != g->order()) {
      r.status = WitnessStatus::hypothesis_failed;
      for (Elem x = 0; x < g->order(); ++x) {
        if (!ndn.contains(x)) {
          r.detail = "hypothesis N_G(D)N = G violated: the coset of " + g->label(x)
                     + " modulo N does not intersect N_G(D)";
          break;
        }
      }
      return r;
    }

    r.extension         = make_extension(g, r.n, limits);
    auto const& ext     = *r.extension;
    r.transversal       = orbit_transversal(ext, h, d);
    r.transversal_check = check_transversal(ext, *r.transversal, h, d);
    if (!r.transversal_check.ok()) {
      r.status = WitnessStatus::check_failed;
      r.detail = "transversal check: " + r.transversal_check.failure;
      return r;
    }
    r.gamma = kk_images(ext, *r.transversal);

    // D in the coordinates of the kernel group.
    std::vector<Elem> d_local;
    for (Elem i = 0; i < ext.kernel.elements.size(); ++i) {
      if (d.contains(ext.kernel.elements[i])) {
        d_local.push_back(i);
      }
    }
    Subgroup dl  = make_subgroup(*ext.kernel_group, std::move(d_local));
    r.separation = separating_pair(ext.kernel_group, dl, nv, inner_targets, limits);
    if (!r.separation->found) {
      std::vector<Elem> un;
      for (Elem x : r.separation->unseparated) {
        un.push_back(ext.kernel.elements[x]);
      }
      r.status = WitnessStatus::no_separating_pair;
      r.detail = "no separating pair for D in N; unseparated: " + element_list(*g, un);
      return r;
    }

    WreathProduct kw = kk_wreath(ext);
    r.wreath.emplace(r.separation->m, kw.action());
    std::vector<WreathElement> fi, gi;
    for (auto const& x : r.gamma) {
      fi.push_back(induced_element(r.separation->lambda, x));
      gi.push_back(induced_element(r.separation->rho, x));
    }
    Realized real      = realize(g, *r.wreath, fi, gi, form, limits);
    r.target           = real.target;
    r.target_compact   = real.compact;
    r.f                = real.f;
    r.g                = real.g;
    if (!is_homomorphism(r.f) || !is_homomorphism(r.g)) {
      r.status = WitnessStatus::check_failed;
      r.detail = "induced maps fail to be homomorphisms";
      return r;
    }
    r.equalizer         = equalizer(r.f, r.g);
    r.agree_on_h        = is_subset(h, r.equalizer);
    r.meets_n_in_d      = intersection(*g, r.equalizer, r.n) == d;
    r.target_in_variety = is_member(*r.target, v, limits);
    if (!r.agree_on_h) {
      r.status = WitnessStatus::check_failed;
      r.detail = "induced maps disagree on H";
      return r;
    }
    if (!r.meets_n_in_d) {
      r.status = WitnessStatus::check_failed;
      r.detail = "equalizer meets N in " + describe(*g, intersection(*g, r.equalizer, r.n)) + ", not D";
      return r;
    }
    if (!r.target_in_variety) {
      r.status = WitnessStatus::check_failed;
      r.detail = "witness group is not in " + v.name();
      return r;
    }
    r.upper  = intersection(*g, r.equalizer, join(*g, r.n, h));
    r.status = d_exact ? WitnessStatus::certified : WitnessStatus::upper_bound_only;
    return r;
  }

}  // namespace domkit
