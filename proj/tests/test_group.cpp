#include <doctest.h>

#include "domkit/hom_search.hpp"
#include "domkit/products.hpp"
#include "domkit/standard.hpp"
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
}  // namespace

TEST_CASE("from_table validates the axioms") {
  CHECK_THROWS_AS(FiniteGroup::from_rows({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_rows({{0, 1}, {1, 2}}), ValidationError);
  // Latin square with identity that is not associative.
  std::vector<std::vector<Elem>> loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
                                      {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_rows(loop), ValidationError);
  // Identity not at index 0 is moved there.
  auto g = FiniteGroup::from_rows({{1, 0}, {0, 1}}, {"a", "e"});
  CHECK(g->label(0) == "e");
  CHECK(g->mul(1, 1) == 0);
}

TEST_CASE("closure") {
  auto s3 = st::symmetric(3);
  CHECK(closure(*s3, {}).elements == std::vector<Elem>{0});
  auto a3 = closure(*s3, {lbl(s3, "(123)")});
  CHECK(a3.order() == 3);
  CHECK(closure(*s3, std::span<Elem const>(oracle::all(*s3))).order() == 6);
  for (auto const& g : {st::dihedral(4), st::alternating(4), st::dicyclic(3)}) {
    for (Elem a = 0; a < g->order(); ++a) {
      for (Elem b = a; b < g->order(); b += 3) {
        CHECK(closure(*g, {a, b}).elements == oracle::closure(*g, {a, b}));
      }
    }
  }
}

TEST_CASE("normal closure, normalizer, normality") {
  auto s3 = st::symmetric(3);
  CHECK(normal_closure(*s3, std::vector<Elem>{lbl(s3, "(12)")}).order() == 6);
  CHECK(normal_closure(*s3, std::vector<Elem>{0}).order() == 1);
  auto a3 = closure(*s3, {lbl(s3, "(123)")});
  CHECK(normal_closure(*s3, a3.elements) == a3);
  CHECK(normalizer(*s3, a3).order() == 6);
  auto h = closure(*s3, {lbl(s3, "(12)")});
  CHECK(normalizer(*s3, h) == h);
  CHECK(normalizer(*s3, whole_group(*s3)).order() == 6);
  CHECK(is_normal(*s3, a3));
  CHECK_FALSE(is_normal(*s3, h));
  CHECK(cosets(*s3, whole_group(*s3)).size() == 1);
  auto cs = cosets(*s3, h);
  CHECK(cs.size() == 3);
  CHECK(cs[0] == h.elements);

  auto s4 = st::symmetric(4);
  for (auto const& k : all_subgroups(*s4)) {
    CHECK(is_normal(*s4, k) == oracle::is_normal(*s4, k.elements));
    CHECK(normal_closure(*s4, k.generators).elements == oracle::normal_closure(*s4, k.generators));
  }
}

TEST_CASE("subgroup lattice counts") {
  CHECK(all_subgroups(*st::symmetric(3)).size() == 6);
  CHECK(all_subgroups(*st::symmetric(4)).size() == 30);
  CHECK(normal_subgroups(*st::symmetric(4)).size() == 4);
  CHECK(subgroup_class_representatives(*st::symmetric(4)).size() == 11);
  CHECK(all_subgroups(*st::dihedral(4)).size() == 10);
  CHECK(all_subgroups(*st::dicyclic(2)).size() == 6);
}

TEST_CASE("quotient") {
  auto s3 = st::symmetric(3);
  auto a3 = closure(*s3, {lbl(s3, "(123)")});
  auto q  = quotient(s3, a3);
  CHECK(q.group->order() == 2);
  CHECK(kernel(q.projection) == a3);
  CHECK(is_surjective(q.projection));
  auto t = quotient(s3, trivial_subgroup());
  CHECK(isomorphic(t.group, s3).has_value());
  auto c4 = st::cyclic(4);
  CHECK(quotient(c4, closure(*c4, {2})).group->order() == 2);
  CHECK_THROWS_AS(quotient(s3, closure(*s3, {lbl(s3, "(12)")})), PreconditionError);
}

TEST_CASE("direct and semidirect products") {
  auto c2 = st::cyclic(2), c3 = st::cyclic(3);
  auto v  = direct_product(c2, c2).group;
  CHECK(v->order() == 4);
  CHECK_FALSE(isomorphic(v, st::cyclic(4)).has_value());
  CHECK(isomorphic(direct_product(st::symmetric(3), st::trivial()).group, st::symmetric(3)).has_value());
  auto c6 = direct_product(c2, c3).group;
  CHECK(c6->order() == 6);
  CHECK(c6->is_abelian());

  std::vector<Permutation> trivial_act(2, Permutation{0, 1, 2});
  CHECK(isomorphic(semidirect_product(c3, c2, trivial_act).group, direct_product(c3, c2).group).has_value());
  std::vector<Permutation> inversion{{0, 1, 2}, {0, 2, 1}};
  auto                     sd = semidirect_product(c3, c2, inversion);
  CHECK(isomorphic(sd.group, st::symmetric(3)).has_value());
  CHECK(is_homomorphism(sd.inject_normal));
  CHECK(is_homomorphism(sd.project_complement));
  std::vector<Permutation> bad{{0, 1, 2}, {0, 2, 2}};
  CHECK_THROWS_AS(semidirect_product(c3, c2, bad), PreconditionError);
  std::vector<Permutation> not_hom{{0, 2, 1}, {0, 2, 1}};
  CHECK_THROWS_AS(semidirect_product(c3, c2, not_hom), PreconditionError);
}

TEST_CASE("isomorphism search") {
  auto s3 = st::symmetric(3);
  auto id = isomorphic(s3, s3);
  REQUIRE(id);
  CHECK(is_homomorphism(*id));
  CHECK_FALSE(isomorphic(st::cyclic(4), st::abelian({2, 2})).has_value());
  auto w  = regular_wreath(st::cyclic(2), st::cyclic(2)).flat;
  auto iso = isomorphic(w, st::dihedral(4));
  REQUIRE(iso);
  CHECK(oracle::is_hom(*w, *st::dihedral(4), iso->image));
  CHECK(is_injective(*iso));
  CHECK_FALSE(isomorphic(st::dihedral(4), st::dicyclic(2)).has_value());
  CHECK(isomorphic(st::dihedral(2), st::abelian({2, 2})).has_value());
}

TEST_CASE("exponent and element orders") {
  CHECK(group_exponent(*st::cyclic(4)) == 4);
  CHECK(group_exponent(*st::symmetric(3)) == 6);
  CHECK(group_exponent(*st::trivial()) == 1);
  CHECK(group_exponent(*st::symmetric(4)) == 12);
}

TEST_CASE("homomorphism helpers") {
  auto c4  = st::cyclic(4);
  auto inv = make_homomorphism(c4, c4, {0, 3, 2, 1});
  CHECK(is_injective(inv));
  CHECK_THROWS_AS(make_homomorphism(c4, c4, {0, 2, 2, 1}), ValidationError);
  auto sq = make_homomorphism(c4, c4, {0, 2, 0, 2});
  CHECK(kernel(sq).order() == 2);
  CHECK(image_of(sq).order() == 2);
  CHECK(preimage(sq, trivial_subgroup()) == kernel(sq));
  CHECK(compose(sq, inv) == sq);
  auto sub = subgroup_as_group(c4, closure(*c4, {2}));
  CHECK(sub.group->order() == 2);
  CHECK(sub.local(2) == 1);
}
