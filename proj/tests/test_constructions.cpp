#include <doctest.h>

#include "domkit/extension.hpp"
#include "domkit/hom_search.hpp"
#include "domkit/products.hpp"
#include "domkit/standard.hpp"
#include "domkit/witness.hpp"
#include "domkit/wreath.hpp"
#include "oracles.hpp"

using namespace domkit;
namespace st = domkit::standard;

namespace {
  Elem lbl(GroupPtr const& g, char const* s) {
    auto e = g->find_label(s);
    REQUIRE(e.has_value());
    return *e;
  }

  // Composition rule for a right action, checked directly.
  bool right_action_ok(GroupAction const& a) {
    auto const& k = *a.group;
    for (Elem g = 0; g < k.order(); ++g) {
      for (Elem h = 0; h < k.order(); ++h) {
        for (std::uint32_t w = 0; w < a.degree; ++w) {
          if (a.perms[k.mul(g, h)][w] != a.perms[h][a.perms[g][w]]) {
            return false;
          }
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("actions") {
  auto s3 = st::symmetric(3);
  auto r  = regular_action(s3);
  CHECK(r.degree == 6);
  CHECK(right_action_ok(r));
  auto h = closure(*s3, {lbl(s3, "(12)")});
  auto c = coset_action(s3, h);
  CHECK(c.degree == 3);
  CHECK(right_action_ok(c));
  for (Elem x = 0; x < 6; ++x) {
    CHECK((c.perms[x][0] == 0) == h.contains(x));
  }
  GroupAction bad = r;
  std::swap(bad.perms[1][0], bad.perms[1][1]);
  CHECK_THROWS_AS(validate_action(bad), ValidationError);
}

TEST_CASE("wreath products") {
  auto c2 = st::cyclic(2), c3 = st::cyclic(3);
  auto w  = regular_wreath(c2, c2);
  CHECK(w.flat->order() == 8);
  CHECK(isomorphic(w.flat, st::dihedral(4)).has_value());
  CHECK(regular_wreath(c2, c3).flat->order() == 24);
  CHECK(isomorphic(regular_wreath(st::trivial(), st::symmetric(3)).flat, st::symmetric(3)).has_value());
  CHECK(is_normal(*w.flat, w.base_subgroup));
  CHECK(is_homomorphism(w.top_embedding));
  CHECK(is_homomorphism(w.top_projection));
  CHECK(compose(w.top_projection, w.top_embedding) == identity_hom(c2));
  CHECK(is_homomorphism(w.coordinate_embedding(1)));
  CHECK_THROWS_AS(regular_wreath(c3, st::cyclic(4), Limits{100}), CapExceeded);

  // Symbolic arithmetic matches the flat table.
  auto s3 = st::symmetric(3);
  auto ww = omega_wreath(c3, coset_action(s3, closure(*s3, {lbl(s3, "(12)")})));
  CHECK(ww.flat->order() == 6 * 27);
  for (Elem a = 0; a < ww.flat->order(); a += 7) {
    for (Elem b = 0; b < ww.flat->order(); b += 5) {
      CHECK(ww.encode(ww.product.mul(ww.decode(a), ww.decode(b))) == ww.flat->mul(a, b));
    }
    CHECK(ww.encode(ww.product.inv(ww.decode(a))) == ww.flat->inv(a));
  }
  CHECK(ww.product.encode(ww.product.identity()) == 0);
}

TEST_CASE("induced maps") {
  auto c2 = st::cyclic(2), c4 = st::cyclic(4);
  auto w  = regular_wreath(c2, c2);
  CHECK(induced_map(identity_hom(c2), w, w) == identity_hom(w.flat));
  auto collapse = induced_map(trivial_hom(c2, st::trivial()), w);
  CHECK(collapse.target.flat->order() == 2);
  CHECK(kernel(collapse.map) == w.base_subgroup);
  auto inc = induced_map(make_homomorphism(c2, c4, {0, 2}), w);
  CHECK(inc.target.flat->order() == 32);
  CHECK(is_homomorphism(inc.map));
  CHECK(is_injective(inc.map));
  CHECK(image_of(inc.map).order() == 8);
}

TEST_CASE("extensions and transversals") {
  auto c4  = st::cyclic(4);
  auto ext = make_extension(c4, closure(*c4, {2}));
  validate_extension(ext);
  auto t = default_transversal(ext);
  for (Elem b = 0; b < ext.quotient->order(); ++b) {
    CHECK(ext.projection(t.lift[b]) == b);
  }
  CHECK(t.lift[0] == 0);
  auto kk = kk_embedding(ext, t);
  CHECK(kk.wreath.flat->order() == 8);
  CHECK(isomorphic(kk.wreath.flat, st::dihedral(4)).has_value());
  CHECK(image_of(kk.map).order() == 4);
  CHECK(oracle::is_hom(*c4, *kk.wreath.flat, kk.map.image));

  auto whole = make_extension(c4, whole_group(*c4));
  auto tw    = default_transversal(whole);
  CHECK(tw.lift == std::vector<Elem>{0});
  auto kw = kk_embedding(whole, tw);
  CHECK(kw.wreath.flat->order() == 4);
  CHECK(is_injective(kw.map));

  // Split extension with a complement.
  auto s3  = st::symmetric(3);
  auto a3  = closure(*s3, {lbl(s3, "(123)")});
  auto e3  = make_extension(s3, a3);
  auto cpl = closure(*s3, {lbl(s3, "(13)")});
  auto tc  = default_transversal(e3, cpl);
  for (Elem b = 0; b < 2; ++b) {
    CHECK(cpl.contains(tc.lift[b]));
    CHECK(e3.projection(tc.lift[b]) == b);
  }
  auto k3 = kk_embedding(e3, tc);
  CHECK(k3.wreath.flat->order() == 18);
  CHECK(oracle::is_hom(*s3, *k3.wreath.flat, k3.map.image));
  CHECK(is_injective(k3.map));
  CHECK_THROWS_AS(make_extension(s3, closure(*s3, {lbl(s3, "(12)")})), PreconditionError);
}

TEST_CASE("orbit transversal") {
  auto s3 = st::symmetric(3);
  auto a3 = closure(*s3, {lbl(s3, "(123)")});
  auto h  = closure(*s3, {lbl(s3, "(12)")});
  auto ext = make_extension(s3, a3);
  auto t   = orbit_transversal(ext, h, trivial_subgroup());
  CHECK(t.lift == std::vector<Elem>{0, lbl(s3, "(12)")});
  CHECK(check_transversal(ext, t, h, trivial_subgroup()).ok());
  auto tw = orbit_transversal(s3, whole_group(*s3), h, trivial_subgroup());
  CHECK(tw.lift == std::vector<Elem>{0});

  // N_G(D) N != G: a non-normal D inside a normal N that H normalizes.
  // Found by search over a few small groups.
  bool found = false;
  for (auto const& g : {st::symmetric(4), st::dihedral(4), st::alternating(4)}) {
    for (auto const& n : normal_subgroups(*g)) {
      for (auto const& d : all_subgroups(*g)) {
        if (!is_subset(d, n)) {
          continue;
        }
        auto nd = normalizer(*g, d);
        if (join(*g, nd, n).order() == g->order()) {
          continue;
        }
        found = true;
        CHECK_THROWS_AS(orbit_transversal(g, n, trivial_subgroup(), d), PreconditionError);
        break;
      }
      if (found) break;
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("KK embedding over all small extensions") {
  for (auto const& g : {st::symmetric(3), st::dihedral(4), st::dicyclic(2), st::alternating(4),
                        st::abelian({2, 4})}) {
    for (auto const& n : normal_subgroups(*g)) {
      auto ext = make_extension(g, n);
      auto kw  = kk_wreath(ext);
      auto im  = kk_images(ext, default_transversal(ext));
      CHECK(is_symbolic_homomorphism(*g, kw, im));
      for (Elem x = 0; x < g->order(); ++x) {
        CHECK(im[x].top == ext.projection(x));
      }
    }
  }
}

TEST_CASE("McKay witness") {
  auto c4 = st::cyclic(4);
  auto aa = Variety::metabelian();
  auto w  = mckay_witness(c4, closure(*c4, {2}), st::cyclic(2), &aa, Limits{}, WitnessForm::full);
  CHECK(w.target->order() == 16);
  CHECK(w.equalizer == closure(*c4, {2}));
  CHECK(oracle::equalizer(w.f.image, w.g.image) == closure(*c4, {2}).elements);
  CHECK(oracle::is_hom(*c4, *w.target, w.f.image));
  CHECK(oracle::is_hom(*c4, *w.target, w.g.image));

  auto ww = mckay_witness(c4, whole_group(*c4), st::cyclic(3));
  CHECK(ww.wreath.degree() == 1);
  CHECK(ww.f == ww.g);

  auto c2 = st::cyclic(2);
  auto w2 = mckay_witness(c2, trivial_subgroup(), c2, &aa, Limits{}, WitnessForm::full);
  CHECK(isomorphic(w2.target, regular_wreath(c2, c2).flat).has_value());
  CHECK(w2.equalizer.order() == 1);

  // Compact and full forms have the same equalizer.
  auto s3 = st::symmetric(3);
  auto h  = closure(*s3, {lbl(s3, "(12)")});
  auto fa = mckay_witness(s3, h, c2, nullptr, Limits{}, WitnessForm::full);
  auto fc = mckay_witness(s3, h, c2, nullptr, Limits{}, WitnessForm::compact);
  CHECK(fa.equalizer == fc.equalizer);
  CHECK(fc.target->order() <= fa.target->order());

  CHECK_THROWS_AS(mckay_witness(c4, trivial_subgroup(), st::trivial()), PreconditionError);
  CHECK_THROWS_AS(mckay_witness(s3, h, c2, &aa), PreconditionError);
}

TEST_CASE("separating pairs") {
  auto c4 = st::cyclic(4);
  auto s  = separating_pair(c4, closure(*c4, {2}), Variety::abelian(), {});
  REQUIRE(s.found);
  CHECK(s.strategy == "quotient");
  CHECK(s.m->order() == 2);
  CHECK(equalizer(s.lambda, s.rho) == closure(*c4, {2}));
  auto w = separating_pair(c4, whole_group(*c4), Variety::abelian(), {});
  REQUIRE(w.found);
  CHECK(w.m->order() == 1);

  // A non-normal D in S3 with inner variety all groups: needs the catalog.
  auto s3 = st::symmetric(3);
  auto d  = closure(*s3, {lbl(s3, "(12)")});
  auto nf = separating_pair(s3, d, Variety::all_groups(), {});
  CHECK_FALSE(nf.found);
  CHECK_FALSE(nf.unseparated.empty());
  std::vector<Target> cat{{st::symmetric(3), "S3"}, {st::cyclic(2), "C2"}};
  auto viacat = separating_pair(s3, d, Variety::all_groups(), cat);
  REQUIRE(viacat.found);
  CHECK(equalizer(viacat.lambda, viacat.rho) == d);
}

TEST_CASE("transversal witness pipeline") {
  auto s3 = st::symmetric(3);
  auto h  = closure(*s3, {lbl(s3, "(12)")});
  auto aa = Variety::metabelian();
  auto r  = bigone_witness(s3, h, aa, trivial_subgroup(), true, {}, Limits{}, WitnessForm::full);
  CHECK(r.status == WitnessStatus::certified);
  REQUIRE(r.target);
  CHECK(r.target->order() == 18);
  CHECK(r.transversal_check.ok());
  CHECK(r.upper == h);
  CHECK(r.target_in_variety);
  CHECK(oracle::equalizer(r.f.image, r.g.image) == h.elements);

  auto ab = st::abelian({2, 4});
  auto ra = bigone_witness(ab, closure(*ab, {1}), aa, trivial_subgroup(), true, {});
  CHECK(ra.status == WitnessStatus::certified);
  CHECK(ra.n.order() == 1);
  CHECK(ra.upper == closure(*ab, {1}));

  CHECK_THROWS_AS(bigone_witness(s3, h, aa, h, true, {}), PreconditionError);
}
