#include "domkit/products.hpp"

#include <algorithm>
#include <map>

#include "domkit/hom_search.hpp"

namespace domkit {

  QuotientGroup quotient(GroupPtr const& g, Subgroup const& n, Limits const& limits) {
    validate_subgroup(*g, n);
    for (Elem x : g->generators()) {
      for (Elem s : n.elements) {
        if (!n.contains(g->conj(x, s))) {
          throw PreconditionError("quotient: subgroup is not normal (" + g->label(x) + " * "
                                  + g->label(s) + " * " + g->label(x) + "^-1 = "
                                  + g->label(g->conj(x, s)) + " lies outside it)");
        }
      }
    }
    auto cs = cosets(*g, n);
    check_order_cap(cs.size(), limits, "quotient");
    std::vector<Elem> coset_of(g->order());
    std::vector<Elem> reps;
    for (Elem i = 0; i < cs.size(); ++i) {
      reps.push_back(cs[i].front());
      for (Elem x : cs[i]) {
        coset_of[x] = i;
      }
    }
    std::size_t       q = cs.size();
    std::vector<Elem> t(q * q);
    for (Elem i = 0; i < q; ++i) {
      for (Elem j = 0; j < q; ++j) {
        t[i * q + j] = coset_of[g->mul(reps[i], reps[j])];
      }
    }
    std::vector<std::string> labels;
    if (g->has_labels()) {
      for (Elem r : reps) {
        labels.push_back(n.is_trivial() ? g->label(r) : "[" + g->label(r) + "]");
      }
    }
    GroupPtr qg = FiniteGroup::from_table(q, std::move(t), std::move(labels));
    return QuotientGroup{qg, Homomorphism{g, qg, std::move(coset_of)}, std::move(reps)};
  }

  DirectProduct direct_product(GroupPtr const& a, GroupPtr const& b, Limits const& limits) {
    std::size_t na = a->order(), nb = b->order(), n = na * nb;
    check_order_cap(n, limits, "direct product");
    std::vector<Elem> t(n * n);
    for (Elem x = 0; x < n; ++x) {
      Elem xa = x / nb, xb = x % nb;
      for (Elem y = 0; y < n; ++y) {
        Elem ya = y / nb, yb = y % nb;
        t[x * n + y] = a->mul(xa, ya) * static_cast<Elem>(nb) + b->mul(xb, yb);
      }
    }
    std::vector<std::string> labels;
    if (a->has_labels() || b->has_labels()) {
      for (Elem x = 0; x < n; ++x) {
        labels.push_back("(" + a->label(x / nb) + "," + b->label(x % nb) + ")");
      }
    }
    std::vector<Elem> gens;
    for (Elem s : a->generators()) {
      gens.push_back(s * static_cast<Elem>(nb));
    }
    for (Elem s : b->generators()) {
      gens.push_back(s);
    }
    GroupPtr g = FiniteGroup::from_table(n, std::move(t), std::move(labels), std::move(gens));

    std::vector<Elem> il(na), ir(nb), pl(n), pr(n);
    for (Elem x = 0; x < na; ++x) {
      il[x] = x * static_cast<Elem>(nb);
    }
    for (Elem y = 0; y < nb; ++y) {
      ir[y] = y;
    }
    for (Elem z = 0; z < n; ++z) {
      pl[z] = z / nb;
      pr[z] = z % nb;
    }
    return DirectProduct{g,
                         Homomorphism{a, g, std::move(il)},
                         Homomorphism{b, g, std::move(ir)},
                         Homomorphism{g, a, std::move(pl)},
                         Homomorphism{g, b, std::move(pr)}};
  }

  bool is_automorphism(FiniteGroup const& g, Permutation const& p) {
    if (p.size() != g.order()) {
      return false;
    }
    std::vector<char> hit(g.order(), 0);
    for (Elem v : p) {
      if (!g.valid(v) || hit[v]) {
        return false;
      }
      hit[v] = 1;
    }
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        if (p[g.mul(x, y)] != g.mul(p[x], p[y])) {
          return false;
        }
      }
    }
    return true;
  }

  SemidirectProduct semidirect_product(GroupPtr const&                 n,
                                       GroupPtr const&                 k,
                                       std::vector<Permutation> const& act,
                                       Limits const&                   limits) {
    std::size_t nn = n->order(), nk = k->order(), order = nn * nk;
    if (act.size() != nk) {
      throw PreconditionError("semidirect product: action lists " + std::to_string(act.size())
                              + " permutations, expected one per element of K ("
                              + std::to_string(nk) + ")");
    }
    for (Elem x = 0; x < nk; ++x) {
      if (!is_automorphism(*n, act[x])) {
        throw PreconditionError("semidirect product: action of " + k->label(x)
                                + " is not an automorphism of N");
      }
    }
    for (Elem x = 0; x < nk; ++x) {
      for (Elem y = 0; y < nk; ++y) {
        Permutation const& xy = act[k->mul(x, y)];
        for (Elem m = 0; m < nn; ++m) {
          if (xy[m] != act[x][act[y][m]]) {
            throw PreconditionError("semidirect product: action is not a homomorphism K -> Aut(N) "
                                    "(act("
                                    + k->label(x) + "*" + k->label(y) + ") != act(" + k->label(x)
                                    + ") o act(" + k->label(y) + "))");
          }
        }
      }
    }
    check_order_cap(order, limits, "semidirect product");
    std::vector<Elem> t(order * order);
    for (Elem a = 0; a < order; ++a) {
      Elem an = a / nk, ak = a % nk;
      for (Elem b = 0; b < order; ++b) {
        Elem bn = b / nk, bk = b % nk;
        t[a * order + b] = n->mul(an, act[ak][bn]) * static_cast<Elem>(nk) + k->mul(ak, bk);
      }
    }
    std::vector<std::string> labels;
    if (n->has_labels() || k->has_labels()) {
      for (Elem a = 0; a < order; ++a) {
        labels.push_back("(" + n->label(a / nk) + "," + k->label(a % nk) + ")");
      }
    }
    std::vector<Elem> gens;
    for (Elem s : n->generators()) {
      gens.push_back(s * static_cast<Elem>(nk));
    }
    for (Elem s : k->generators()) {
      gens.push_back(s);
    }
    GroupPtr g = FiniteGroup::from_table(order, std::move(t), std::move(labels), std::move(gens));
    std::vector<Elem> in(nn), ik(nk), pk(order);
    for (Elem m = 0; m < nn; ++m) {
      in[m] = m * static_cast<Elem>(nk);
    }
    for (Elem x = 0; x < nk; ++x) {
      ik[x] = x;
    }
    for (Elem a = 0; a < order; ++a) {
      pk[a] = a % nk;
    }
    return SemidirectProduct{g,
                             Homomorphism{n, g, std::move(in)},
                             Homomorphism{k, g, std::move(ik)},
                             Homomorphism{g, k, std::move(pk)}};
  }

  std::vector<Permutation> automorphisms(FiniteGroup const& g, Limits const& limits) {
    std::vector<Permutation> out;
    HomSearchSpec            spec;
    spec.bijective   = true;
    spec.node_budget = limits.node_budget;
    search_homs(g, g, spec, [&](std::span<Elem const> img) {
      out.emplace_back(img.begin(), img.end());
      check_order_cap(out.size(), limits, "automorphism group");
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  AutomorphismGroup automorphism_group(FiniteGroup const& g, Limits const& limits) {
    auto                           perms = automorphisms(g, limits);
    std::map<Permutation, Elem>    index;
    for (Elem i = 0; i < perms.size(); ++i) {
      index[perms[i]] = i;
    }
    std::size_t       n = perms.size();
    std::vector<Elem> t(n * n);
    Permutation       tmp(g.order());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem x = 0; x < g.order(); ++x) {
          tmp[x] = perms[a][perms[b][x]];
        }
        t[a * n + b] = index.at(tmp);
      }
    }
    return AutomorphismGroup{FiniteGroup::from_table(n, std::move(t)), std::move(perms)};
  }

}  // namespace domkit
