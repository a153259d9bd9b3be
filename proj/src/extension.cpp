#include "domkit/extension.hpp"

#include <algorithm>
#include <stdexcept>

#include "domkit/products.hpp"

namespace domkit {

  namespace {

    constexpr Elem kUnset = static_cast<Elem>(-1);

    Elem kernel_local(ExtensionPresentation const& ext, Elem x) {
      auto const& e  = ext.kernel.elements;
      auto        it = std::lower_bound(e.begin(), e.end(), x);
      if (it == e.end() || *it != x) {
        throw std::logic_error("extension: element " + ext.total->label(x)
                               + " expected in the kernel");
      }
      return static_cast<Elem>(it - e.begin());
    }

  }  // namespace

  ExtensionPresentation make_extension(GroupPtr const& g, Subgroup const& n, Limits const& limits) {
    QuotientGroup q  = quotient(g, n, limits);
    SubgroupGroup sg = subgroup_as_group(g, n);
    return ExtensionPresentation{g, n, sg.group, q.group, sg.inclusion, q.projection};
  }

  void validate_extension(ExtensionPresentation const& ext) {
    if (!is_homomorphism(ext.injection) || !is_homomorphism(ext.projection)) {
      throw ValidationError("extension: injection or projection is not a homomorphism");
    }
    if (!is_injective(ext.injection)) {
      throw ValidationError("extension: injection is not injective");
    }
    if (!is_surjective(ext.projection)) {
      throw ValidationError("extension: projection is not surjective");
    }
    if (image_of(ext.injection) != kernel(ext.projection)) {
      throw ValidationError("extension: image of the injection differs from the kernel of the "
                            "projection");
    }
  }

  Transversal default_transversal(ExtensionPresentation const& ext,
                                  std::optional<Subgroup> const& complement) {
    auto const&       g = *ext.total;
    std::size_t       q = ext.quotient->order();
    std::vector<Elem> lift(q, kUnset);
    if (complement) {
      validate_subgroup(g, *complement);
      if (complement->order() * ext.kernel.order() != g.order()
          || intersection(g, *complement, ext.kernel).order() != 1) {
        throw PreconditionError("transversal: subgroup is not a complement of the kernel");
      }
      for (Elem c : complement->elements) {
        lift[ext.projection(c)] = c;
      }
    } else {
      for (Elem x = 0; x < g.order(); ++x) {
        Elem b = ext.projection(x);
        if (lift[b] == kUnset) {
          lift[b] = x;
        }
      }
    }
    return Transversal{ext.quotient, std::move(lift), ext.projection};
  }

  Transversal orbit_transversal(ExtensionPresentation const& ext, Subgroup const& h, Subgroup const& d) {
    auto const& g = *ext.total;
    auto const& b = *ext.quotient;
    validate_subgroup(g, h);
    validate_subgroup(g, d);
    if (!is_subset(d, ext.kernel)) {
      throw PreconditionError("orbit transversal: D is not contained in N");
    }
    Subgroup nd = normalizer(g, d);
    for (Elem x : h.elements) {
      if (!nd.contains(x)) {
        throw PreconditionError("orbit transversal: H does not normalize D (" + g.label(x)
                                + " lies outside N_G(D))");
      }
    }
    std::vector<Elem> best(b.order(), kUnset);
    for (Elem x : nd.elements) {
      Elem c = ext.projection(x);
      if (best[c] == kUnset) {
        best[c] = x;
      }
    }
    std::vector<Elem> lift(b.order(), kUnset);
    for (Elem c = 0; c < b.order(); ++c) {
      if (lift[c] != kUnset) {
        continue;
      }
      if (best[c] == kUnset) {
        throw PreconditionError("hypothesis violated: N_G(D)N != G; coset " + b.label(c)
                                + " does not meet N_G(D)");
      }
      Elem root = best[c];
      lift[c]   = root;
      for (Elem x : h.elements) {
        Elem c2 = b.mul(c, b.inv(ext.projection(x)));
        if (lift[c2] == kUnset) {
          lift[c2] = g.mul(root, g.inv(x));
        }
      }
    }
    Transversal t{ext.quotient, std::move(lift), ext.projection};
    auto        check = check_transversal(ext, t, h, d);
    if (!check.ok()) {
      throw std::logic_error("orbit transversal failed its own check: " + check.failure);
    }
    return t;
  }

  Transversal orbit_transversal(GroupPtr const& g, Subgroup const& n, Subgroup const& h,
                                Subgroup const& d, Limits const& limits) {
    return orbit_transversal(make_extension(g, n, limits), h, d);
  }

  TransversalCheck check_transversal(ExtensionPresentation const& ext, Transversal const& t,
                                     Subgroup const& h, Subgroup const& d) {
    auto const&      g = *ext.total;
    std::size_t      q = ext.quotient->order();
    TransversalCheck r;
    if (t.lift.size() != q) {
      r.failure = "transversal has the wrong number of lifts";
      return r;
    }
    std::vector<char> in_d(g.order(), 0), in_h(g.order(), 0);
    for (Elem x : d.elements) {
      in_d[x] = 1;
    }
    for (Elem x : h.elements) {
      in_h[x] = 1;
    }
    r.section = true;
    for (Elem c = 0; c < q; ++c) {
      if (!g.valid(t.lift[c]) || ext.projection(t.lift[c]) != c) {
        r.section = false;
        r.failure = "lift of coset " + std::to_string(c) + " lies in another coset";
        return r;
      }
    }
    r.identity_lift = t.lift[0] == FiniteGroup::identity;
    if (!r.identity_lift) {
      r.failure = "the kernel coset is not lifted to e";
    }
    r.in_normalizer = true;
    for (Elem c = 0; c < q && r.in_normalizer; ++c) {
      Elem y  = t.lift[c];
      Elem yi = g.inv(y);
      for (Elem x : d.elements) {
        if (!in_d[g.mul(g.mul(y, x), yi)]) {
          r.in_normalizer = false;
          r.failure       = "lift " + g.label(y) + " does not normalize D";
          break;
        }
      }
    }
    r.orbit_rule = true;
    for (Elem c = 0; c < q && r.orbit_rule; ++c) {
      Elem y = t.lift[c];
      for (Elem x : h.elements) {
        Elem c2 = ext.projection(g.mul(y, g.inv(x)));
        Elem z  = g.mul(g.inv(y), t.lift[c2]);
        if (!in_h[z]) {
          r.orbit_rule = false;
          r.failure    = "lift of coset " + std::to_string(c2) + " is not " + g.label(y)
                      + " times an element of H";
          break;
        }
      }
    }
    return r;
  }

  WreathProduct kk_wreath(ExtensionPresentation const& ext) {
    return WreathProduct(ext.kernel_group, regular_action(ext.quotient));
  }

  std::vector<WreathElement> kk_images(ExtensionPresentation const& ext, Transversal const& t) {
    auto const&                g = *ext.total;
    auto const&                b = *ext.quotient;
    std::vector<WreathElement> out(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      Elem k   = ext.projection(x);
      Elem ki  = b.inv(k);
      out[x].top = k;
      out[x].base.resize(b.order());
      for (Elem y = 0; y < b.order(); ++y) {
        Elem v        = g.mul(g.mul(t.lift[b.mul(y, ki)], x), g.inv(t.lift[y]));
        out[x].base[y] = kernel_local(ext, v);
      }
    }
    return out;
  }

  bool is_symbolic_homomorphism(FiniteGroup const& g, WreathProduct const& w,
                                std::vector<WreathElement> const& images) {
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        if (w.mul(images[x], images[y]) != images[g.mul(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  KKEmbedding kk_embedding(ExtensionPresentation const& ext, Transversal const& t, Limits const& limits) {
    WreathGroup       w   = regular_wreath(ext.kernel_group, ext.quotient, limits);
    auto              img = kk_images(ext, t);
    std::vector<Elem> map(img.size());
    for (Elem x = 0; x < img.size(); ++x) {
      map[x] = w.encode(img[x]);
    }
    Homomorphism gamma{ext.total, w.flat, std::move(map)};
    if (!is_homomorphism(gamma) || !is_injective(gamma)) {
      throw std::logic_error("embedding into the wreath product is not an injective homomorphism");
    }
    return KKEmbedding{std::move(w), std::move(gamma)};
  }

}  // namespace domkit
