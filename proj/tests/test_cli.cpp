#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "domkit/catalog.hpp"
#include "domkit/cli.hpp"
#include "domkit/io.hpp"
#include "domkit/standard.hpp"

using namespace domkit;
namespace fs = std::filesystem;

namespace {
  struct Run {
    int         code;
    std::string out, err;
  };

  Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "domkit");
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir() {
    static fs::path d = [] {
      fs::path p = fs::temp_directory_path() / "domkit_cli_test";
      fs::remove_all(p);
      fs::create_directories(p);
      save_group(*standard::symmetric(3), p / "s3.json");
      save_group(*standard::cyclic(2), p / "c2.json");
      save_group(*standard::symmetric(4), p / "s4.json");
      save_catalog(build_catalog(Variety::metabelian(), 12), p / "cat");
      std::ofstream(p / "metabelian.json")
          << R"({"name": "metabelian", "product": ["abelian", "abelian"]})";
      return p;
    }();
    return d;
  }

  std::string at(char const* name) {
    return (dir() / name).string();
  }
}  // namespace

TEST_CASE("membership and wreath") {
  auto m = run({"member", "--group", at("s3.json"), "--variety", at("metabelian.json")});
  CHECK(m.code == 0);
  CHECK(m.out == "true\n");
  auto n = run({"member", "--group", at("s4.json"), "--variety", at("metabelian.json")});
  CHECK(n.out == "false\n");
  auto w = run({"wreath", "--base", at("c2.json"), "--top", at("c2.json"), "--format", "json"});
  CHECK(w.code == 0);
  Json j = Json::parse(w.out);
  CHECK(j["result"]["order"] == 8);
  CHECK(j["result"]["group"]["table"].size() == 8);
}

TEST_CASE("certify via the CLI") {
  auto r = run({"dominion", "certify", "--group", at("s3.json"), "--subgroup", "(12)", "--variety",
                at("metabelian.json"), "--catalog", at("cat"), "--format", "json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["tool"] == "domkit");
  CHECK(j["version"] == cli::kVersion);
  CHECK(j["result"]["status"] == "certified_exact");
  CHECK(j["result"]["dominion"]["order"] == 2);
  CHECK(j["inputs"].size() == 3);
  for (auto const& in : j["inputs"]) {
    CHECK(in["fingerprint"].get<std::string>().size() == 16);
  }
  // Byte-identical on repetition.
  auto again = run({"dominion", "certify", "--group", at("s3.json"), "--subgroup", "(12)", "--variety",
                    at("metabelian.json"), "--catalog", at("cat"), "--format", "json"});
  CHECK(again.out == r.out);
}

TEST_CASE("other subcommands") {
  CHECK(run({"group", "inspect", "--group", at("s4.json")}).code == 0);
  auto q = run({"group", "quotient", "--group", at("s3.json"), "--subgroup", "(123)", "--format", "json"});
  CHECK(Json::parse(q.out)["result"]["order"] == 2);
  auto p = run({"group", "product", "--left", at("c2.json"), "--right", at("s3.json"), "--format", "json"});
  CHECK(Json::parse(p.out)["result"]["order"] == 12);
  auto v = run({"verbal", "--group", at("s4.json"), "--variety", "metabelian", "--format", "json"});
  CHECK(Json::parse(v.out)["result"]["verbal_subgroup"]["order"] == 4);
  auto e = run({"embed", "--group", at("s3.json"), "--kernel", "(123)", "--format", "json"});
  Json ej = Json::parse(e.out);
  CHECK(ej["result"]["wreath_order"] == 18);
  CHECK(ej["result"]["injective"] == true);
  CHECK(ej["result"]["projection_compatible"] == true);
  auto eo = run({"embed", "--group", at("s3.json"), "--kernel", "(123)", "--transversal", "orbit",
                 "--subgroup", "(12)"});
  CHECK(eo.code == 0);
  auto mk = run({"witness", "mckay", "--group", "name:C4", "--subgroup", "c^2", "--m", "name:C2", "--variety",
                 "metabelian", "--format", "json"});
  CHECK(mk.code == 0);
  CHECK(Json::parse(mk.out)["result"]["equalizer"]["order"] == 2);
  auto b = run({"witness", "bigone", "--group", at("s3.json"), "--subgroup", "(12)", "--variety", "metabelian",
                "--format", "json"});
  CHECK(Json::parse(b.out)["result"]["status"] == "certified");
  auto a = run({"dominion", "approx", "--group", "name:C4", "--subgroup", "e", "--variety", "abelian",
                "--catalog-order", "2", "--format", "json"});
  CHECK(Json::parse(a.out)["result"]["subgroup"]["order"] == 2);
  auto l = run({"catalog", "list", "--catalog", at("cat")});
  CHECK(l.code == 0);
  auto cb = run({"catalog", "build", "--variety", "abelian", "--max-order", "8", "--format", "json"});
  CHECK(Json::parse(cb.out)["result"]["entries"].size() == 11);
  auto h = run({"dominion", "hunt", "--variety", "metabelian", "--max-order", "8"});
  CHECK(h.code == 0);
}

TEST_CASE("exit codes and messages") {
  auto parse = run({"member", "--group", at("s3.json")});
  CHECK(parse.code == cli::kInputError);
  CHECK(run({"member", "--group", at("s3.json"), "--variety", "abelian", "--bogus"}).code == cli::kInputError);
  auto bad = run({"dominion", "certify", "--group", at("s4.json"), "--subgroup", "(12)", "--variety",
                  "metabelian", "--catalog", at("cat")});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("not in") != std::string::npos);
  auto label = run({"verbal", "--group", at("s3.json"), "--variety", "abelian", "--subgroup", "x"});
  CHECK(label.code == cli::kInputError);
  auto badsub = run({"group", "quotient", "--group", at("s3.json"), "--subgroup", "(12)"});
  CHECK(badsub.code == cli::kInputError);
  CHECK(badsub.err.find("normal") != std::string::npos);
  auto cap = run({"wreath", "--base", at("s3.json"), "--top", at("s3.json"), "--order-cap", "1000"});
  CHECK(cap.code == cli::kLimitError);
  auto missing = run({"member", "--group", at("none.json"), "--variety", "abelian"});
  CHECK(missing.code == cli::kInputError);
  CHECK(run({"--version"}).code == 0);
}
