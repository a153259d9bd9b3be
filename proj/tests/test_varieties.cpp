#include <doctest.h>

#include "domkit/io.hpp"
#include "domkit/products.hpp"
#include "domkit/standard.hpp"
#include "domkit/variety.hpp"
#include "domkit/word.hpp"
#include "oracles.hpp"

using namespace domkit;
namespace st = domkit::standard;

TEST_CASE("word parsing") {
  CHECK(parse_word("x1^3").syllables == std::vector<Syllable>{{1, 3}});
  CHECK(parse_word("[x1,x2]").syllables == std::vector<Syllable>{{1, -1}, {2, -1}, {1, 1}, {2, 1}});
  CHECK(parse_word(" x1 x2^-2 ").syllables == std::vector<Syllable>{{1, 1}, {2, -2}});
  CHECK(parse_word("(x1x2)^2").syllables == std::vector<Syllable>{{1, 1}, {2, 1}, {1, 1}, {2, 1}});
  CHECK(parse_word("(x1x2)^-1").syllables == std::vector<Syllable>{{2, -1}, {1, -1}});
  CHECK(parse_word("[[x1,x2],x3]").arity() == 3);
  CHECK_THROWS_AS(parse_word("x1^0"), ParseError);
  CHECK_THROWS_AS(parse_word("x0"), ParseError);
  CHECK_THROWS_AS(parse_word("[x1 x2]"), ParseError);
  CHECK_THROWS_AS(parse_word(""), ParseError);
  try {
    parse_word("x1 y");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.position == 3);
  }
  Word w = parse_word("[x1,x2]x3^2");
  CHECK(parse_word(to_string(w)) == w);
  CHECK(inverse(inverse(w)) == w);
}

TEST_CASE("word evaluation") {
  auto s3 = st::symmetric(3);
  auto c4 = st::cyclic(4);
  Word comm = parse_word("[x1,x2]");
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      CHECK(eval_word(*c4, comm, std::vector<Elem>{a, b}) == 0);
    }
  }
  CHECK(eval_word(*c4, parse_word("x1^2"), std::vector<Elem>{1}) == 2);
  Elem t = *s3->find_label("(12)"), r = *s3->find_label("(123)");
  Elem v = eval_word(*s3, comm, std::vector<Elem>{t, r});
  CHECK(v != 0);
  CHECK(s3->element_order(v) == 3);
  CHECK(v == s3->mul(s3->mul(s3->inv(t), s3->inv(r)), s3->mul(t, r)));
}

TEST_CASE("verbal subgroups against brute force") {
  auto s3 = st::symmetric(3);
  CHECK(verbal_subgroup(*s3, Variety::abelian()).elements == oracle::derived(*s3, oracle::all(*s3)));
  CHECK(verbal_subgroup(*s3, Variety::abelian()).order() == 3);
  CHECK(verbal_subgroup(*st::abelian({2, 4}), Variety::abelian()).order() == 1);
  auto s4 = st::symmetric(4);
  auto vv = verbal_subgroup(*s4, Variety::metabelian());
  CHECK(vv.order() == 4);
  CHECK(vv.elements == oracle::derived(*s4, oracle::derived(*s4, oracle::all(*s4))));
  for (auto const& g : {st::dihedral(4), st::dicyclic(3), st::alternating(4), st::symmetric(4)}) {
    auto all = oracle::all(*g);
    CHECK(verbal_subgroup(*g, Variety::abelian_exponent(2)).elements ==
          oracle::closure(*g, [&] {
            auto a = oracle::derived(*g, all);
            auto b = oracle::power_values(*g, all, 2);
            a.insert(a.end(), b.begin(), b.end());
            return a;
          }()));
    // Class representatives and the plain tuple sweep agree.
    VerbalOptions plain{false};
    CHECK(verbal_subgroup(*g, Variety::metabelian(), Limits{}, plain) ==
          verbal_subgroup(*g, Variety::metabelian()));
  }
  auto lower_central = Variety::basis("nilpotent-2", {"[[x1,x2],x3]"});
  CHECK(verbal_subgroup(*st::dihedral(4), lower_central).order() == 1);
  CHECK(verbal_subgroup(*st::symmetric(3), lower_central).order() == 3);
  CHECK_THROWS_AS(verbal_subgroup(*s4, Variety::metabelian(), Limits{20000, 10'000'000, 10}), CapExceeded);
}

TEST_CASE("membership") {
  CHECK(is_member(*st::symmetric(3), Variety::metabelian()));
  CHECK_FALSE(is_member(*st::symmetric(4), Variety::metabelian()));
  CHECK(is_member(*st::trivial(), Variety::trivial()));
  CHECK(is_member(*st::trivial(), Variety::metabelian()));
  CHECK_FALSE(is_member(*st::cyclic(4), Variety::abelian_exponent(2)));
  CHECK(is_member(*st::abelian({2, 2, 2}), Variety::abelian_exponent(2)));
  CHECK(is_member(*st::symmetric(4), Variety::all_groups()));
}

TEST_CASE("exponents and disjointness") {
  auto e3 = Variety::abelian_exponent(3), e2 = Variety::abelian_exponent(2), e4 = Variety::abelian_exponent(4);
  CHECK(disjoint_by_exponent(e3, e2));
  CHECK_FALSE(disjoint_by_exponent(e2, e4));
  CHECK_THROWS_AS(disjoint_by_exponent(e3, Variety::abelian()), PreconditionError);
  auto lit = Variety::basis("burnside-3", {"x1^3"});
  CHECK(lit.exponent() == 3u);
  CHECK(Variety::product("p", {e3, e2}).exponent() == 6u);
  CHECK(e2.is_abelian());
  CHECK(Variety::basis("exp2", {"x1^2"}).is_abelian());
  CHECK_FALSE(Variety::metabelian().is_abelian());
}

TEST_CASE("containment and split") {
  auto aa      = Variety::metabelian();
  auto [n, q]  = aa.split();
  CHECK(n.name() == "abelian");
  CHECK(q.name() == "abelian");
  CHECK(Variety::abelian_exponent(2).evidently_contained_in(Variety::abelian()));
  CHECK(Variety::trivial().evidently_contained_in(aa));
  CHECK_FALSE(Variety::abelian().evidently_contained_in(Variety::abelian_exponent(2)));
  CHECK_THROWS_AS(Variety::abelian().split(), PreconditionError);
  auto three   = Variety::product("aaa", {Variety::abelian(), Variety::abelian(), Variety::abelian()});
  auto [n3, q3] = three.split();
  CHECK(q3.is_product());
  // Three-step solvable: S4 is in it, and AAA(S4) = {e}.
  CHECK(is_member(*st::symmetric(4), three));
}

TEST_CASE("variety files") {
  Json j = Json::parse(R"({"name": "e3", "laws": ["[x1,x2]", "x1^3"]})");
  auto v = variety_from_json(j);
  CHECK(v.exponent() == 3u);
  CHECK(is_member(*st::abelian({3, 3}), v));
  CHECK_FALSE(is_member(*st::cyclic(9), v));
  auto round = variety_from_json(variety_to_json(v));
  CHECK(round.laws() == v.laws());
  CHECK(load_variety("abelian-exp5").exponent() == 5u);
  CHECK(load_variety("laws:[x1,x2];x1^4").exponent() == 4u);
  CHECK_THROWS_AS(load_variety("laws:x1^"), ParseError);
  CHECK_THROWS_AS(variety_from_json(Json::parse(R"({"name": "x"})")), ValidationError);
}
