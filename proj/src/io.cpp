#include "domkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace domkit {

  namespace {

    std::uint64_t as_index(Json const& v, std::string const& what) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ValidationError(what + " must be a non-negative integer");
      }
      return v.get<std::uint64_t>();
    }

    std::vector<std::string> split_tokens(std::string const& s, std::string const& seps) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : s) {
        if (seps.find(c) != std::string::npos) {
          if (!cur.empty()) {
            out.push_back(cur);
          }
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) {
        out.push_back(cur);
      }
      return out;
    }

  }  // namespace

  std::string read_text(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ValidationError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Json group_to_json(FiniteGroup const& g) {
    Json j;
    j["order"] = g.order();
    Json rows  = Json::array();
    for (Elem a = 0; a < g.order(); ++a) {
      auto r = g.row(a);
      rows.push_back(std::vector<Elem>(r.begin(), r.end()));
    }
    j["table"] = std::move(rows);
    if (g.has_labels()) {
      j["labels"] = g.labels();
    }
    j["generators"] = g.generators();
    return j;
  }

  GroupPtr group_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
      throw ValidationError("group file needs 'order' and 'table'");
    }
    std::uint64_t n = as_index(j["order"], "order");
    if (n == 0) {
      throw ValidationError("order must be positive");
    }
    Json const& t = j["table"];
    if (!t.is_array()) {
      throw ValidationError("table must be an array");
    }
    std::vector<Elem> table;
    table.reserve(n * n);
    if (!t.empty() && t[0].is_array()) {
      if (t.size() != n) {
        throw ValidationError("table has " + std::to_string(t.size()) + " rows, expected "
                              + std::to_string(n));
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (!t[r].is_array() || t[r].size() != n) {
          throw ValidationError("table row " + std::to_string(r) + " does not have "
                                + std::to_string(n) + " entries");
        }
        for (auto const& v : t[r]) {
          table.push_back(static_cast<Elem>(as_index(v, "table entry")));
        }
      }
    } else {
      if (t.size() != n * n) {
        throw ValidationError("flat table has " + std::to_string(t.size()) + " entries, expected "
                              + std::to_string(n * n));
      }
      for (auto const& v : t) {
        table.push_back(static_cast<Elem>(as_index(v, "table entry")));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j["labels"].is_null()) {
      if (!j["labels"].is_array() || j["labels"].size() != n) {
        throw ValidationError("labels must list one string per element");
      }
      for (auto const& l : j["labels"]) {
        if (!l.is_string()) {
          throw ValidationError("labels must be strings");
        }
        labels.push_back(l.get<std::string>());
      }
    }
    std::vector<Elem> gens;
    if (j.contains("generators") && !j["generators"].is_null()) {
      for (auto const& v : j["generators"]) {
        gens.push_back(static_cast<Elem>(as_index(v, "generator")));
      }
    }
    return FiniteGroup::from_table(n, std::move(table), std::move(labels), std::move(gens));
  }

  GroupPtr load_group(std::filesystem::path const& path) {
    Json j;
    try {
      j = Json::parse(read_text(path));
    } catch (Json::parse_error const& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
    try {
      return group_from_json(j);
    } catch (ValidationError const& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
  }

  void save_group(FiniteGroup const& g, std::filesystem::path const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw ValidationError("cannot write " + path.string());
    }
    out << group_to_json(g).dump() << "\n";
  }

  Json variety_to_json(Variety const& v) {
    Json j;
    j["name"] = v.name();
    if (v.is_product()) {
      Json f = Json::array();
      for (auto const& x : v.factors()) {
        f.push_back(variety_to_json(x));
      }
      j["product"] = std::move(f);
      if (!v.contained_in().empty()) {
        j["contained_in"] = v.contained_in();
      }
      return j;
    }
    Json laws = Json::array();
    for (auto const& w : v.laws()) {
      laws.push_back(to_string(w));
    }
    j["laws"] = std::move(laws);
    if (auto e = v.exponent()) {
      j["exponent"] = *e;
    }
    if (v.is_abelian()) {
      j["abelian"] = true;
    }
    if (!v.contained_in().empty()) {
      j["contained_in"] = v.contained_in();
    }
    return j;
  }

  Variety variety_from_json(Json const& j, std::filesystem::path const& base_dir) {
    if (!j.is_object()) {
      throw ValidationError("variety must be a JSON object");
    }
    std::string name = j.value("name", std::string("unnamed"));
    Variety     v    = Variety::trivial();
    if (j.contains("product")) {
      if (!j["product"].is_array()) {
        throw ValidationError("variety " + name + ": 'product' must be an array");
      }
      std::vector<Variety> factors;
      for (auto const& f : j["product"]) {
        if (f.is_string()) {
          factors.push_back(load_variety(f.get<std::string>(), base_dir));
        } else {
          factors.push_back(variety_from_json(f, base_dir));
        }
      }
      v = Variety::product(name, std::move(factors));
    } else {
      if (!j.contains("laws") || !j["laws"].is_array()) {
        throw ValidationError("variety " + name + " needs 'laws' or 'product'");
      }
      std::vector<std::string> laws;
      for (auto const& l : j["laws"]) {
        if (!l.is_string()) {
          throw ValidationError("variety " + name + ": laws must be strings");
        }
        laws.push_back(l.get<std::string>());
      }
      std::optional<std::uint64_t> e;
      if (j.contains("exponent") && !j["exponent"].is_null()) {
        e = as_index(j["exponent"], "exponent");
      }
      v = Variety::basis(name, laws, e, j.value("abelian", false));
    }
    if (j.contains("contained_in")) {
      for (auto const& c : j["contained_in"]) {
        v.declare_contained_in(c.get<std::string>());
      }
    }
    return v;
  }

  Variety load_variety(std::string const& ref, std::filesystem::path const& base_dir) {
    if (ref == "trivial") {
      return Variety::trivial();
    }
    if (ref == "all") {
      return Variety::all_groups();
    }
    if (ref == "abelian") {
      return Variety::abelian();
    }
    if (ref == "metabelian") {
      return Variety::metabelian();
    }
    std::string const exp_prefix = "abelian-exp";
    if (ref.rfind(exp_prefix, 0) == 0 && ref.size() > exp_prefix.size()
        && std::all_of(ref.begin() + exp_prefix.size(), ref.end(), ::isdigit)) {
      return Variety::abelian_exponent(std::stoull(ref.substr(exp_prefix.size())));
    }
    if (ref.rfind("laws:", 0) == 0) {
      return Variety::basis(ref, split_tokens(ref.substr(5), ";"));
    }
    std::filesystem::path p = ref;
    if (p.is_relative() && !base_dir.empty()) {
      p = base_dir / p;
    }
    if (!std::filesystem::exists(p)) {
      throw ValidationError("unknown variety '" + ref + "' (not a builtin and no such file)");
    }
    Json j;
    try {
      j = Json::parse(read_text(p));
    } catch (Json::parse_error const& e) {
      throw ValidationError(p.string() + ": " + e.what());
    }
    return variety_from_json(j, p.parent_path());
  }

  Subgroup parse_subgroup_spec(FiniteGroup const& g, std::string const& spec) {
    std::vector<Elem> gens;
    for (auto const& tok : split_tokens(spec, " \t\n;")) {
      if (auto e = g.find_label(tok)) {
        gens.push_back(*e);
        continue;
      }
      for (auto const& part : split_tokens(tok, ",")) {
        if (!std::all_of(part.begin(), part.end(), ::isdigit)) {
          throw ValidationError("subgroup specifier: '" + tok
                                + "' is neither an element label nor an index list");
        }
        auto v = std::stoull(part);
        if (v >= g.order()) {
          throw ValidationError("subgroup specifier: index " + part + " out of range for order "
                                + std::to_string(g.order()));
        }
        gens.push_back(static_cast<Elem>(v));
      }
    }
    return closure(g, gens);
  }

  Json subgroup_to_json(FiniteGroup const& g, Subgroup const& h) {
    Json j;
    j["order"]      = h.order();
    j["elements"]   = h.elements;
    j["generators"] = h.generators;
    if (g.has_labels()) {
      std::vector<std::string> l;
      for (Elem x : h.elements) {
        l.push_back(g.label(x));
      }
      j["labels"] = std::move(l);
    }
    return j;
  }

  Json hom_to_json(Homomorphism const& f) {
    Json j;
    j["domain_order"]   = f.domain->order();
    j["codomain_order"] = f.codomain->order();
    j["image"]          = f.image;
    return j;
  }

}  // namespace domkit
