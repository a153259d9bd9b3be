#ifndef DOMKIT_TESTS_ORACLES_HPP_
#define DOMKIT_TESTS_ORACLES_HPP_

// Brute-force reference computations.  They read only the Cayley table
// (FiniteGroup::mul and order) and never call library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "domkit/group.hpp"

namespace oracle {

  using domkit::Elem;
  using domkit::FiniteGroup;
  using ElemSet = std::vector<Elem>;

  inline Elem inverse(FiniteGroup const& g, Elem a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (g.mul(a, b) == 0) {
        return b;
      }
    }
    return 0;
  }

  // Repeatedly multiplies every pair until nothing new appears.
  inline ElemSet closure(FiniteGroup const& g, ElemSet const& gens) {
    std::set<Elem> s(gens.begin(), gens.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Elem> cur(s.begin(), s.end());
      for (Elem a : cur) {
        for (Elem b : cur) {
          grew |= s.insert(g.mul(a, b)).second;
        }
      }
    }
    return {s.begin(), s.end()};
  }

  inline bool contains(ElemSet const& s, Elem x) {
    return std::find(s.begin(), s.end(), x) != s.end();
  }

  inline ElemSet normal_closure(FiniteGroup const& g, ElemSet const& s) {
    ElemSet conj;
    for (Elem x : s) {
      for (Elem y = 0; y < g.order(); ++y) {
        conj.push_back(g.mul(g.mul(y, x), inverse(g, y)));
      }
    }
    return closure(g, conj);
  }

  inline bool is_normal(FiniteGroup const& g, ElemSet const& h) {
    for (Elem x : h) {
      for (Elem y = 0; y < g.order(); ++y) {
        if (!contains(h, g.mul(g.mul(y, x), inverse(g, y)))) {
          return false;
        }
      }
    }
    return true;
  }

  // Subgroup generated by all commutators a^-1 b^-1 a b of elements of w.
  inline ElemSet derived(FiniteGroup const& g, ElemSet const& w) {
    ElemSet vals;
    for (Elem a : w) {
      for (Elem b : w) {
        vals.push_back(g.mul(g.mul(inverse(g, a), inverse(g, b)), g.mul(a, b)));
      }
    }
    return closure(g, vals);
  }

  // Subgroup generated by x^e for x in w.
  inline ElemSet power_values(FiniteGroup const& g, ElemSet const& w, std::uint64_t e) {
    ElemSet vals;
    for (Elem a : w) {
      Elem p = 0;
      for (std::uint64_t i = 0; i < e; ++i) {
        p = g.mul(p, a);
      }
      vals.push_back(p);
    }
    return closure(g, vals);
  }

  inline ElemSet all(FiniteGroup const& g) {
    ElemSet s(g.order());
    for (Elem i = 0; i < g.order(); ++i) {
      s[i] = i;
    }
    return s;
  }

  inline bool is_hom(FiniteGroup const& a, FiniteGroup const& b, std::vector<Elem> const& f) {
    for (Elem x = 0; x < a.order(); ++x) {
      for (Elem y = 0; y < a.order(); ++y) {
        if (f[a.mul(x, y)] != b.mul(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  // Every total function a -> b that is a homomorphism; |b|^|a| candidates.
  inline std::vector<std::vector<Elem>> homs_by_functions(FiniteGroup const& a, FiniteGroup const& b) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem>              f(a.order(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == a.order()) {
        if (is_hom(a, b, f)) {
          out.push_back(f);
        }
        return;
      }
      for (Elem y = 0; y < b.order(); ++y) {
        f[i] = y;
        rec(i + 1);
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  // A generating list chosen without library help: walk the elements in
  // index order and keep those outside the span of the ones kept so far.
  inline ElemSet naive_generators(FiniteGroup const& a) {
    ElemSet gens, span{0};
    for (Elem x = 1; x < a.order(); ++x) {
      if (!contains(span, x)) {
        gens.push_back(x);
        span = closure(a, gens);
      }
    }
    return gens;
  }

  // Every assignment of |b|^k images to k generators, extended along words
  // in the generators; kept when the extension is well defined and a
  // homomorphism.
  inline std::vector<std::vector<Elem>> homs_by_generators(FiniteGroup const& a, FiniteGroup const& b) {
    ElemSet const                    gens = naive_generators(a);
    std::vector<std::vector<Elem>>   out;
    std::vector<Elem>                img(gens.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == gens.size()) {
        std::vector<Elem> f(a.order(), UINT32_MAX);
        std::vector<Elem> queue{0};
        f[0]    = 0;
        bool ok = true;
        for (std::size_t q = 0; q < queue.size() && ok; ++q) {
          Elem x = queue[q];
          for (std::size_t j = 0; j < gens.size(); ++j) {
            Elem y  = a.mul(x, gens[j]);
            Elem fy = b.mul(f[x], img[j]);
            if (f[y] == UINT32_MAX) {
              f[y] = fy;
              queue.push_back(y);
            } else if (f[y] != fy) {
              ok = false;
              break;
            }
          }
        }
        if (ok && is_hom(a, b, f)) {
          out.push_back(f);
        }
        return;
      }
      for (Elem y = 0; y < b.order(); ++y) {
        img[i] = y;
        rec(i + 1);
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  inline ElemSet equalizer(std::vector<Elem> const& f, std::vector<Elem> const& g) {
    ElemSet e;
    for (Elem x = 0; x < f.size(); ++x) {
      if (f[x] == g[x]) {
        e.push_back(x);
      }
    }
    return e;
  }

  inline ElemSet intersect(ElemSet const& a, ElemSet const& b) {
    ElemSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
  }

  inline bool subset(ElemSet const& a, ElemSet const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  // Intersection of equalizers over all pairs of homomorphisms into the
  // targets that agree on h.
  inline ElemSet dominion_approx(FiniteGroup const& g, ElemSet const& h,
                                 std::vector<domkit::GroupPtr> const& targets) {
    ElemSet result = all(g);
    for (auto const& c : targets) {
      auto homs = homs_by_generators(g, *c);
      for (auto const& f : homs) {
        for (auto const& k : homs) {
          bool agree = true;
          for (Elem x : h) {
            agree &= f[x] == k[x];
          }
          if (agree) {
            result = intersect(result, equalizer(f, k));
          }
        }
      }
    }
    return result;
  }

}  // namespace oracle

#endif  // DOMKIT_TESTS_ORACLES_HPP_
