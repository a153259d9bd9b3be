#include <doctest.h>

#include <algorithm>

#include "domkit/dominion.hpp"
#include "domkit/hom_search.hpp"
#include "domkit/standard.hpp"
#include "oracles.hpp"

using namespace domkit;
namespace st = domkit::standard;

namespace {
  std::vector<std::vector<Elem>> images(std::vector<Homomorphism> const& hs) {
    std::vector<std::vector<Elem>> out;
    for (auto const& h : hs) {
      out.push_back(h.image);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<GroupPtr> small_groups() {
    return {st::trivial(),     st::cyclic(2), st::cyclic(3), st::cyclic(4), st::abelian({2, 2}),
            st::cyclic(5),     st::cyclic(6), st::symmetric(3)};
  }
}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(enumerate_homs(st::cyclic(2), st::cyclic(2)).size() == 2);
  CHECK(enumerate_homs(st::symmetric(3), st::symmetric(3)).size() == 10);
  CHECK(enumerate_homs(st::cyclic(3), st::cyclic(2)).size() == 1);
  CHECK(enumerate_homs(st::abelian({2, 2}), st::symmetric(3)).size() == 10);
  CHECK(enumerate_homs(st::dihedral(4), st::dihedral(4)).size() == 36);
}

TEST_CASE("enumeration matches brute force") {
  for (auto const& g : small_groups()) {
    for (auto const& c : small_groups()) {
      auto got = images(enumerate_homs(g, c));
      CHECK(got == oracle::homs_by_generators(*g, *c));
      if (g->order() <= 5) {
        CHECK(got == oracle::homs_by_functions(*g, *c));
      }
    }
  }
}

TEST_CASE("search options") {
  auto s3 = st::symmetric(3);
  std::size_t inj = 0, bij = 0;
  search_homs(*st::cyclic(3), *s3, HomSearchSpec{.injective = true}, [&](auto) {
    ++inj;
    return true;
  });
  CHECK(inj == 2);
  search_homs(*s3, *s3, HomSearchSpec{.bijective = true}, [&](auto) {
    ++bij;
    return true;
  });
  CHECK(bij == 6);
  std::size_t first = 0;
  search_homs(*s3, *s3, {}, [&](auto) { return ++first < 3; });
  CHECK(first == 3);
  CHECK_THROWS_AS(search_homs(*st::symmetric(4), *st::symmetric(4), HomSearchSpec{.node_budget = 5},
                              [](auto) { return true; }),
                  BudgetExhausted);
  // Lexicographic order of generator images, each once.
  std::vector<std::vector<Elem>> seen;
  search_homs(*st::dihedral(4), *st::dihedral(4), {}, [&](std::span<Elem const> im) {
    seen.emplace_back(im.begin(), im.end());
    return true;
  });
  auto gens = st::dihedral(4)->generators();
  for (std::size_t i = 1; i < seen.size(); ++i) {
    std::vector<Elem> a, b;
    for (Elem x : gens) {
      a.push_back(seen[i - 1][x]);
      b.push_back(seen[i][x]);
    }
    CHECK(a < b);
  }
}

TEST_CASE("agreeing pairs") {
  auto c4 = st::cyclic(4), c2 = st::cyclic(2);
  auto diag = agreeing_pairs(c4, c2, whole_group(*c4), {}, true);
  CHECK(diag.size() == 2);
  for (auto const& p : diag) {
    CHECK(p.f == p.g);
  }
  CHECK(agreeing_pairs(c4, c2, trivial_subgroup(), {}, true).size() == 4);
  CHECK(agreeing_pairs(c4, c2, closure(*c4, {2}), {}, true).size() == 4);
  CHECK(agreeing_pairs(c4, c2, trivial_subgroup()).size() == 3);

  // Ordered pair counts against the oracle.
  auto s3 = st::symmetric(3);
  for (auto const& h : all_subgroups(*s3)) {
    auto   homs  = oracle::homs_by_generators(*s3, *s3);
    size_t count = 0;
    for (auto const& f : homs) {
      for (auto const& g : homs) {
        bool ok = true;
        for (Elem x : h.elements) ok &= f[x] == g[x];
        count += ok;
      }
    }
    CHECK(agreeing_pairs(s3, s3, h, {}, true).size() == count);
  }
}

TEST_CASE("equalizers") {
  auto c4  = st::cyclic(4);
  auto id  = identity_hom(c4);
  auto inv = make_homomorphism(c4, c4, {0, 3, 2, 1});
  CHECK(equalizer(id, id).order() == 4);
  CHECK(equalizer(id, inv) == closure(*c4, {2}));
  CHECK(equalizer(id, trivial_hom(c4, c4)).order() == 1);
}

TEST_CASE("catalog approximation") {
  auto c4 = st::cyclic(4);
  auto ab = Variety::abelian();
  auto e  = dominion_upper_approx(c4, trivial_subgroup(), &ab, {});
  CHECK(e.vacuous);
  CHECK(e.subgroup.order() == 4);
  auto one = dominion_upper_approx(c4, trivial_subgroup(), &ab, {{st::cyclic(2), "C2"}});
  CHECK(one.subgroup == closure(*c4, {2}));
  auto two = dominion_upper_approx(c4, trivial_subgroup(), &ab, {{st::cyclic(2), "C2"}, {c4, "C4"}});
  CHECK(two.subgroup.order() == 1);
  REQUIRE_FALSE(two.contributing_pairs.empty());
  CHECK_THROWS_AS(dominion_upper_approx(c4, trivial_subgroup(), &ab, {{st::symmetric(3), "S3"}}),
                  ValidationError);
  CHECK(catalog_fingerprint({{st::cyclic(2), "a"}, {c4, "b"}}) ==
        catalog_fingerprint({{c4, "b"}, {st::cyclic(2), "a"}}));

  // Against the oracle, single- and multi-threaded.
  std::vector<Target> cat{{st::cyclic(2), "C2"}, {st::cyclic(3), "C3"}, {st::symmetric(3), "S3"},
                          {st::cyclic(4), "C4"}};
  std::vector<GroupPtr> raw;
  for (auto const& t : cat) raw.push_back(t.group);
  for (auto const& g : {st::symmetric(3), st::dihedral(4), st::dicyclic(3)}) {
    DominionApproximator a1(g, cat, nullptr, Limits{});
    Limits               par;
    par.jobs = 4;
    DominionApproximator a4(g, cat, nullptr, par);
    for (auto const& h : all_subgroups(*g)) {
      auto r1 = a1.approx(h);
      auto r4 = a4.approx(h);
      CHECK(r1.subgroup.elements == oracle::dominion_approx(*g, h.elements, raw));
      CHECK(r1.subgroup == r4.subgroup);
      CHECK(r1.contributing_pairs.size() == r4.contributing_pairs.size());
    }
  }
}
