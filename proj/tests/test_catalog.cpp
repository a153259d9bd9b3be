#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "domkit/catalog.hpp"
#include "domkit/hom_search.hpp"
#include "domkit/io.hpp"
#include "domkit/standard.hpp"

using namespace domkit;
namespace st = domkit::standard;
namespace fs = std::filesystem;

namespace {
  fs::path scratch(std::string const& name) {
    fs::path p = fs::temp_directory_path() / ("domkit_test_" + name);
    fs::remove_all(p);
    return p;
  }

  bool contains_iso(Catalog const& c, GroupPtr const& g) {
    for (auto const& e : c.entries) {
      if (e.group->order() == g->order() && isomorphic(e.group, g)) {
        return true;
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("abelian catalog up to 8") {
  auto c = build_catalog(Variety::abelian(), 8);
  CHECK(c.entries.size() == 11);
  for (auto const& inv : std::vector<std::vector<std::size_t>>{
           {1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}}) {
    CHECK(contains_iso(c, st::abelian(inv)));
  }
  verify_catalog(c);
  for (std::size_t i = 1; i < c.entries.size(); ++i) {
    CHECK(c.entries[i - 1].group->order() <= c.entries[i].group->order());
  }
}

TEST_CASE("other catalogs") {
  auto t = build_catalog(Variety::trivial(), 10);
  CHECK(t.entries.size() == 1);
  auto m = build_catalog(Variety::metabelian(), 6);
  CHECK(contains_iso(m, st::symmetric(3)));
  CHECK(m.entries.size() == 8);
  auto all = build_catalog(Variety::all_groups(), 12);
  // Groups of order <= 12: 1,1,1,2,1,2,1,5,2,2,1,5.
  CHECK(all.entries.size() == 24);
  CHECK(all.targets(Variety::abelian(), 8).size() == 11);
}

TEST_CASE("catalog files") {
  auto c   = build_catalog(Variety::metabelian(), 8);
  auto dir = scratch("roundtrip");
  save_catalog(c, dir);
  auto back = load_catalog(dir);
  REQUIRE(back.entries.size() == c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    CHECK(back.entries[i].group->table() == c.entries[i].group->table());
    CHECK(back.entries[i].provenance == c.entries[i].provenance);
  }
  CHECK(catalog_fingerprint(back.targets()) == catalog_fingerprint(c.targets()));

  // Corrupted table: the error names the axiom.
  auto bad = scratch("corrupt");
  save_catalog(c, bad);
  Json manifest = Json::parse(read_text(bad / "manifest.json"));
  auto file     = bad / manifest["entries"][3]["file"].get<std::string>();
  Json gj       = Json::parse(read_text(file));
  gj["table"][1][1] = gj["table"][1][2];
  std::ofstream(file) << gj.dump();
  try {
    load_catalog(bad);
    FAIL("corrupted catalog loaded");
  } catch (ValidationError const& e) {
    std::string what = e.what();
    CHECK((what.find("latin") != std::string::npos || what.find("row") != std::string::npos ||
           what.find("column") != std::string::npos || what.find("associativ") != std::string::npos ||
           what.find("invers") != std::string::npos || what.find("closure") != std::string::npos));
  }

  auto missing = scratch("missing");
  save_catalog(c, missing);
  fs::remove(missing / manifest["entries"][2]["file"].get<std::string>());
  CHECK_THROWS_AS(load_catalog(missing), Error);
  CHECK_THROWS_AS(load_catalog(scratch("nothing")), Error);

  // A member outside the catalog variety is rejected on load.
  auto wrong = scratch("wrong");
  save_catalog(build_catalog(Variety::all_groups(), 6), wrong);
  Json m2   = Json::parse(read_text(wrong / "manifest.json"));
  m2["variety"] = variety_to_json(Variety::abelian());
  std::ofstream(wrong / "manifest.json") << m2.dump();
  CHECK_THROWS_AS(load_catalog(wrong), ValidationError);
}

TEST_CASE("group files") {
  auto g    = st::dicyclic(3);
  auto path = scratch("group.json");
  save_group(*g, path);
  auto back = load_group(path);
  CHECK(back->table() == g->table());
  CHECK(back->labels() == g->labels());
  Json flat = Json::parse(R"({"order": 2, "table": [0, 1, 1, 0]})");
  CHECK(group_from_json(flat)->order() == 2);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "table": [0, 1, 1]})")), ValidationError);
  auto s3 = st::symmetric(3);
  CHECK(parse_subgroup_spec(*s3, "(12)").order() == 2);
  CHECK(parse_subgroup_spec(*s3, "1,3").order() == 6);
  CHECK(parse_subgroup_spec(*s3, "(123)").order() == 3);
  CHECK_THROWS_AS(parse_subgroup_spec(*s3, "(1234)"), ValidationError);
  CHECK_THROWS_AS(parse_subgroup_spec(*s3, "9"), ValidationError);
}
