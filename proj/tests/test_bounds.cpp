#include <doctest.h>

#include <algorithm>

#include "domkit/bounds.hpp"
#include "domkit/catalog.hpp"
#include "domkit/products.hpp"
#include "domkit/standard.hpp"
#include "oracles.hpp"

using namespace domkit;
namespace st = domkit::standard;

namespace {
  Elem lbl(GroupPtr const& g, char const* s) {
    auto e = g->find_label(s);
    REQUIRE(e.has_value());
    return *e;
  }

  bool has_rule(SandwichReport const& r, std::string const& tag) {
    return std::find(r.rules_fired.begin(), r.rules_fired.end(), tag) != r.rules_fired.end();
  }

  std::vector<Target> const& aa_targets() {
    static std::vector<Target> t = build_catalog(Variety::metabelian(), 12).targets();
    return t;
  }
}  // namespace

TEST_CASE("inner dominion") {
  auto c6 = st::cyclic(6);
  for (auto const& k : all_subgroups(*c6)) {
    auto r = inner_dominion(c6, k, Variety::abelian(), {});
    CHECK(r.subgroup == k);
    CHECK(r.provenance == Provenance::exact);
  }
  auto s3 = st::symmetric(3);
  auto w  = inner_dominion(s3, whole_group(*s3), Variety::all_groups(), {});
  CHECK(w.reason == "whole");
  CHECK(w.provenance == Provenance::exact);
  // Nonabelian N, non-normal K, a law basis not flagged abelian.
  Variety n2 = Variety::basis("nilpotent-2", {"[[x1,x2],x3]"});
  std::vector<Target> cat{{st::cyclic(2), "C2"}, {st::dihedral(4), "D4"}};
  auto d4 = st::dihedral(4);
  auto k  = closure(*d4, {lbl(d4, "s")});
  auto r  = inner_dominion(d4, k, n2, cat);
  CHECK(is_subset(k, r.subgroup));
  CHECK((r.reason == "approximation" || r.reason == "approximation-closed"));
  CHECK(r.approx.has_value());
}

TEST_CASE("lower and upper bounds") {
  auto s3 = st::symmetric(3);
  auto h  = closure(*s3, {lbl(s3, "(12)")});
  auto aa = Variety::metabelian();
  CHECK(lower_bound(*s3, h, trivial_subgroup()) == h);
  auto u = upper_bound(*s3, h, aa);
  CHECK(u.n.order() == 3);
  CHECK(u.d_prime.order() == 1);
  CHECK(u.upper == h);
  CHECK(u.nh.order() == 6);
  auto a3 = closure(*s3, {lbl(s3, "(123)")});
  CHECK(upper_bound(*s3, a3, aa).upper == a3);
  CHECK(upper_bound(*s3, whole_group(*s3), aa).nh.order() == 6);
  CHECK_THROWS_AS(lower_bound(*s3, a3, h), PreconditionError);
  CHECK(nontrivial_member(aa).value()->order() == 2);
  CHECK(nontrivial_member(Variety::abelian_exponent(3)).value()->order() == 3);
}

TEST_CASE("certify examples") {
  auto aa = Variety::metabelian();
  auto s3 = st::symmetric(3);
  auto h  = closure(*s3, {lbl(s3, "(12)")});
  auto r  = certify(s3, h, aa, {});
  CHECK(r.status == Status::certified_exact);
  REQUIRE(r.dominion);
  CHECK(*r.dominion == h);
  CHECK(has_rule(r, "normal-intersection"));
  CHECK(has_rule(r, "transversal-witness"));

  auto c4 = st::cyclic(4);
  auto rc = certify(c4, closure(*c4, {2}), aa, {});
  CHECK(rc.status == Status::certified_exact);
  CHECK(has_rule(rc, "second-factor-mckay"));
  CHECK(*rc.dominion == closure(*c4, {2}));

  auto a4 = st::alternating(4);
  auto rw = certify(a4, whole_group(*a4), aa, aa_targets());
  CHECK(rw.status == Status::certified_exact);
  CHECK(rw.dominion->order() == 12);

  CHECK_THROWS_AS(certify(st::symmetric(4), trivial_subgroup(), aa, {}), PreconditionError);
  CHECK_THROWS_AS(certify(s3, h, Variety::abelian(), {}), PreconditionError);
}

TEST_CASE("certify invariants over a corpus") {
  auto const& targets = aa_targets();
  auto        aa      = Variety::metabelian();
  std::size_t checked = 0;
  for (auto const& t : targets) {
    DominionApproximator approx(t.group, targets);
    CertifyOptions       opt;
    opt.approximator = &approx;
    for (auto const& h : subgroup_class_representatives(*t.group)) {
      auto r = certify(t.group, h, aa, targets, opt);
      CHECK(is_subset(h, r.lower));
      CHECK(is_subset(r.lower, r.upper));
      REQUIRE(r.approx);
      CHECK(is_subset(r.lower, r.approx->subgroup));
      CHECK(is_subset(r.approx->subgroup, r.upper));
      if (r.status == Status::certified_exact) {
        CHECK(r.lower == r.upper);
        CHECK(*r.dominion == r.lower);
      }
      // Witness pairs really agree on H and have the recorded equalizer.
      for (auto const& w : r.witnesses) {
        CHECK(oracle::equalizer(w.f.image, w.g.image) == w.equalizer.elements);
        CHECK(oracle::subset(h.elements, w.equalizer.elements));
        CHECK(oracle::is_hom(*t.group, *w.target, w.f.image));
        CHECK(oracle::is_hom(*t.group, *w.target, w.g.image));
      }
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("transversal witness hypothesis failure") {
  // Search the corpus for a D in N with H normalizing D but N_G(D) N != G.
  auto aa    = Variety::metabelian();
  bool found = false;
  for (auto const& t : aa_targets()) {
    auto const& g = *t.group;
    auto        n = verbal_subgroup(g, Variety::abelian());
    for (auto const& d : all_subgroups(g)) {
      if (!is_subset(d, n) || join(g, normalizer(g, d), n).order() == g.order()) {
        continue;
      }
      auto r = bigone_witness(t.group, trivial_subgroup(), aa, d, true, {});
      CHECK(r.status == WitnessStatus::hypothesis_failed);
      CHECK_FALSE(r.detail.empty());
      found = true;
      break;
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("absolute closedness") {
  auto e3 = Variety::abelian_exponent(3), e2 = Variety::abelian_exponent(2);
  auto v  = Variety::product("e3e2", {e3, e2});
  auto s3 = st::symmetric(3);
  REQUIRE(is_member(*s3, v));
  std::vector<Target> over{{s3, "S3"}, {st::cyclic(2), "C2"}, {st::cyclic(3), "C3"}};
  auto r = absolute_closedness_check(st::cyclic(2), v, over);
  CHECK(r.all_closed);
  CHECK(r.overgroups_examined == 2);
  CHECK(r.entries.size() == 4);
  for (auto const& e : r.entries) {
    CHECK(e.meets_verbal_trivially);
  }
  auto t = absolute_closedness_check(st::trivial(), v, over);
  CHECK(t.all_closed);
  auto a4 = Variety::abelian_exponent(4);
  CHECK_THROWS_AS(absolute_closedness_check(st::cyclic(2), Variety::product("e2e4", {e2, a4}), over),
                  PreconditionError);
  CHECK_THROWS_AS(absolute_closedness_check(st::cyclic(2), Variety::metabelian(), over), PreconditionError);
}

TEST_CASE("hunt") {
  auto ab = Variety::product("aa-trivial", {Variety::trivial(), Variety::abelian()});
  CHECK(hunt_candidates(Variety::metabelian(), 1, aa_targets(), aa_targets(), aa_targets()).empty());
  auto abcat = build_catalog(Variety::abelian(), 8).targets();
  CHECK(hunt_candidates(ab, 8, abcat, abcat, abcat).empty());
  auto growth = build_catalog(Variety::metabelian(), 24).targets();
  auto found  = hunt_candidates(Variety::metabelian(), 16, aa_targets(), aa_targets(), growth);
  for (auto const& r : found) {
    CHECK(r.status == Status::candidate_nontrivial);
    REQUIRE(r.approx);
    CHECK(r.approx->subgroup.order() > r.h.order());
    CHECK(is_subset(r.approx->subgroup, r.upper));
  }
}
