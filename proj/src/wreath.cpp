#include "domkit/wreath.hpp"

#include <limits>
#include <numeric>

#include "domkit/parallel.hpp"

namespace domkit {

  GroupAction regular_action(GroupPtr const& k) {
    GroupAction a{k, k->order(), {}};
    a.perms.resize(k->order());
    for (Elem x = 0; x < k->order(); ++x) {
      a.perms[x].resize(k->order());
      for (Elem w = 0; w < k->order(); ++w) {
        a.perms[x][w] = k->mul(w, x);
      }
    }
    return a;
  }

  GroupAction coset_action(GroupPtr const& g, Subgroup const& h) {
    validate_subgroup(*g, h);
    auto              cs = cosets(*g, h);
    std::vector<Elem> coset_of(g->order());
    for (Elem i = 0; i < cs.size(); ++i) {
      for (Elem x : cs[i]) {
        coset_of[x] = i;
      }
    }
    GroupAction a{g, cs.size(), {}};
    a.perms.resize(g->order());
    for (Elem x = 0; x < g->order(); ++x) {
      a.perms[x].resize(cs.size());
      for (Elem w = 0; w < cs.size(); ++w) {
        a.perms[x][w] = coset_of[g->mul(g->inv(x), cs[w].front())];
      }
    }
    return a;
  }

  void validate_action(GroupAction const& a) {
    auto const& k = *a.group;
    if (a.perms.size() != k.order()) {
      throw ValidationError("action lists " + std::to_string(a.perms.size())
                            + " permutations for a group of order " + std::to_string(k.order()));
    }
    for (Elem x = 0; x < k.order(); ++x) {
      auto const& p = a.perms[x];
      if (p.size() != a.degree) {
        throw ValidationError("permutation of " + k.label(x) + " has the wrong length");
      }
      std::vector<char> hit(a.degree, 0);
      for (auto v : p) {
        if (v >= a.degree || hit[v]) {
          throw ValidationError("action of " + k.label(x) + " is not a permutation");
        }
        hit[v] = 1;
      }
    }
    for (std::uint32_t w = 0; w < a.degree; ++w) {
      if (a.perms[0][w] != w) {
        throw ValidationError("identity does not act trivially (moves point "
                              + std::to_string(w) + ")");
      }
    }
    for (Elem x = 0; x < k.order(); ++x) {
      for (Elem y = 0; y < k.order(); ++y) {
        auto const& xy = a.perms[k.mul(x, y)];
        for (std::uint32_t w = 0; w < a.degree; ++w) {
          if (xy[w] != a.perms[y][a.perms[x][w]]) {
            throw ValidationError("not a right action: point " + std::to_string(w) + " under "
                                  + k.label(x) + " then " + k.label(y));
          }
        }
      }
    }
  }

  std::size_t WreathElementHash::operator()(WreathElement const& x) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ x.top;
    for (Elem b : x.base) {
      h = (h ^ b) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  WreathProduct::WreathProduct(GroupPtr base, GroupAction action)
      : base_(std::move(base)), action_(std::move(action)) {
    validate_action(action_);
    auto const& k = *action_.group;
    inverse_perm_.resize(k.order());
    for (Elem x = 0; x < k.order(); ++x) {
      inverse_perm_[x] = action_.perms[k.inv(x)];
    }
  }

  std::uint64_t WreathProduct::order() const noexcept {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t  r   = top()->order();
    std::uint64_t  n   = base_->order();
    for (std::size_t i = 0; i < degree(); ++i) {
      if (n > 1 && r > max / n) {
        return max;
      }
      r *= n;
    }
    return r;
  }

  WreathElement WreathProduct::identity() const {
    return WreathElement{0, std::vector<Elem>(degree(), 0)};
  }

  WreathElement WreathProduct::mul(WreathElement const& a, WreathElement const& b) const {
    auto const&   n = *base_;
    WreathElement r{top()->mul(a.top, b.top), std::vector<Elem>(degree())};
    auto const&   shift = inverse_perm_[b.top];
    for (std::size_t w = 0; w < degree(); ++w) {
      r.base[w] = n.mul(a.base[shift[w]], b.base[w]);
    }
    return r;
  }

  WreathElement WreathProduct::inv(WreathElement const& a) const {
    auto const&   n = *base_;
    WreathElement r{top()->inv(a.top), std::vector<Elem>(degree())};
    auto const&   p = action_.perms[a.top];
    for (std::size_t w = 0; w < degree(); ++w) {
      r.base[w] = n.inv(a.base[p[w]]);
    }
    return r;
  }

  WreathElement WreathProduct::top_element(Elem k) const {
    WreathElement r = identity();
    r.top           = k;
    return r;
  }

  WreathElement WreathProduct::coordinate(std::uint32_t omega, Elem v) const {
    WreathElement r = identity();
    r.base.at(omega) = v;
    return r;
  }

  std::uint64_t WreathProduct::encode(WreathElement const& x) const {
    std::uint64_t n   = base_->order();
    std::uint64_t acc = 0;
    std::uint64_t pw  = 1;
    for (std::size_t w = degree(); w-- > 0;) {
      acc = acc * n + x.base[w];
    }
    for (std::size_t w = 0; w < degree(); ++w) {
      pw *= n;
    }
    return x.top * pw + acc;
  }

  WreathElement WreathProduct::decode(std::uint64_t code) const {
    std::uint64_t n  = base_->order();
    std::uint64_t pw = 1;
    for (std::size_t w = 0; w < degree(); ++w) {
      pw *= n;
    }
    WreathElement r{static_cast<Elem>(code / pw), std::vector<Elem>(degree())};
    std::uint64_t rest = code % pw;
    for (std::size_t w = 0; w < degree(); ++w) {
      r.base[w] = static_cast<Elem>(rest % n);
      rest /= n;
    }
    return r;
  }

  std::string WreathProduct::label(WreathElement const& x) const {
    std::string s = "(" + top()->label(x.top) + ";";
    for (std::size_t w = 0; w < degree(); ++w) {
      s += (w ? "," : "") + base_->label(x.base[w]);
    }
    return s + ")";
  }

  Elem WreathGroup::encode(WreathElement const& x) const {
    return static_cast<Elem>(product.encode(x));
  }

  WreathElement WreathGroup::decode(Elem i) const {
    return product.decode(i);
  }

  Homomorphism WreathGroup::coordinate_embedding(std::uint32_t omega) const {
    std::vector<Elem> img(product.base()->order());
    for (Elem v = 0; v < img.size(); ++v) {
      img[v] = encode(product.coordinate(omega, v));
    }
    return Homomorphism{product.base(), flat, std::move(img)};
  }

  WreathGroup omega_wreath(GroupPtr const& n, GroupAction const& action, Limits const& limits) {
    WreathProduct w(n, action);
    check_order_cap(w.order(), limits, "wreath product");
    std::size_t                order = w.order();
    std::vector<WreathElement> all(order);
    for (std::size_t i = 0; i < order; ++i) {
      all[i] = w.decode(i);
    }
    std::vector<Elem> table(order * order);
    parallel_for(order, limits.jobs, [&](std::size_t i) {
      for (std::size_t j = 0; j < order; ++j) {
        table[i * order + j] = static_cast<Elem>(w.encode(w.mul(all[i], all[j])));
      }
    });
    std::vector<std::string> labels;
    labels.reserve(order);
    for (auto const& x : all) {
      labels.push_back(w.label(x));
    }

    // Top generators plus N's generators on one point of each K-orbit.
    std::vector<Elem> gens;
    auto const&       k = *action.group;
    for (Elem s : k.generators()) {
      gens.push_back(static_cast<Elem>(w.encode(w.top_element(s))));
    }
    std::vector<char> seen(action.degree, 0);
    for (std::uint32_t p = 0; p < action.degree; ++p) {
      if (seen[p]) {
        continue;
      }
      for (Elem x = 0; x < k.order(); ++x) {
        seen[action.perms[x][p]] = 1;
      }
      for (Elem s : n->generators()) {
        gens.push_back(static_cast<Elem>(w.encode(w.coordinate(p, s))));
      }
    }
    GroupPtr flat = FiniteGroup::from_table(order, std::move(table), std::move(labels), gens);

    std::size_t base_order = order / k.order();
    Subgroup    base;
    base.elements.resize(base_order);
    std::iota(base.elements.begin(), base.elements.end(), Elem(0));
    for (std::uint32_t p = 0; p < action.degree; ++p) {
      for (Elem s : n->generators()) {
        base.generators.push_back(static_cast<Elem>(w.encode(w.coordinate(p, s))));
      }
    }
    std::vector<Elem> emb(k.order()), proj(order);
    for (Elem x = 0; x < k.order(); ++x) {
      emb[x] = static_cast<Elem>(x * base_order);
    }
    for (std::size_t i = 0; i < order; ++i) {
      proj[i] = static_cast<Elem>(i / base_order);
    }
    GroupPtr top = action.group;
    return WreathGroup{std::move(w), flat, std::move(base), Homomorphism{top, flat, std::move(emb)},
                       Homomorphism{flat, top, std::move(proj)}};
  }

  WreathGroup regular_wreath(GroupPtr const& n, GroupPtr const& k, Limits const& limits) {
    return omega_wreath(n, regular_action(k), limits);
  }

  WreathElement induced_element(Homomorphism const& f, WreathElement const& x) {
    WreathElement r{x.top, std::vector<Elem>(x.base.size())};
    for (std::size_t w = 0; w < x.base.size(); ++w) {
      r.base[w] = f(x.base[w]);
    }
    return r;
  }

  Homomorphism induced_map(Homomorphism const& f, WreathGroup const& source, WreathGroup const& target) {
    if (source.product.base()->fingerprint() != f.domain->fingerprint()
        || target.product.base()->fingerprint() != f.codomain->fingerprint()) {
      throw PreconditionError("induced map: base groups do not match the map's domain and codomain");
    }
    if (source.product.top()->fingerprint() != target.product.top()->fingerprint()
        || source.product.action().perms != target.product.action().perms) {
      throw PreconditionError("induced map: the two wreath products use different actions");
    }
    std::vector<Elem> img(source.flat->order());
    for (Elem i = 0; i < img.size(); ++i) {
      img[i] = target.encode(induced_element(f, source.decode(i)));
    }
    return Homomorphism{source.flat, target.flat, std::move(img)};
  }

  InducedMap induced_map(Homomorphism const& f, WreathGroup const& source, Limits const& limits) {
    WreathGroup  target = omega_wreath(f.codomain, source.product.action(), limits);
    Homomorphism map    = induced_map(f, source, target);
    return InducedMap{std::move(target), std::move(map)};
  }

  Elem WreathSubgroup::find(WreathElement const& x) const {
    auto it = index.find(x);
    if (it == index.end()) {
      throw PreconditionError("element lies outside the generated wreath subgroup");
    }
    return it->second;
  }

  WreathSubgroup generate_in_wreath(WreathProduct const& w, std::vector<WreathElement> const& gens,
                                    Limits const& limits) {
    WreathSubgroup out;
    out.elements.push_back(w.identity());
    out.index.emplace(w.identity(), 0);
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      for (auto const& s : gens) {
        WreathElement y = w.mul(out.elements[i], s);
        if (out.index.count(y)) {
          continue;
        }
        check_order_cap(out.elements.size() + 1, limits, "generated wreath subgroup");
        out.index.emplace(y, static_cast<Elem>(out.elements.size()));
        out.elements.push_back(std::move(y));
      }
    }
    std::size_t       n = out.elements.size();
    std::vector<Elem> table(n * n);
    parallel_for(n, limits.jobs, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = out.index.at(w.mul(out.elements[i], out.elements[j]));
      }
    });
    std::vector<std::string> labels;
    for (auto const& x : out.elements) {
      labels.push_back(w.label(x));
    }
    std::vector<Elem> g;
    for (auto const& s : gens) {
      Elem e = out.index.at(s);
      if (e != 0 && std::find(g.begin(), g.end(), e) == g.end()) {
        g.push_back(e);
      }
    }
    out.group = FiniteGroup::from_table(n, std::move(table), std::move(labels), std::move(g));
    return out;
  }

}  // namespace domkit
