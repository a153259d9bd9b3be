#ifndef DOMKIT_IO_HPP_
#define DOMKIT_IO_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "domkit/group.hpp"
#include "domkit/variety.hpp"

namespace domkit {

  using Json = nlohmann::ordered_json;

  // {order, table, labels?, generators?}; `table` is a list of rows or a
  // flat row-major list.  Loading validates the group axioms and moves the
  // identity to index 0.
  Json     group_to_json(FiniteGroup const& g);
  GroupPtr group_from_json(Json const& j);
  GroupPtr load_group(std::filesystem::path const& path);
  void     save_group(FiniteGroup const& g, std::filesystem::path const& path);

  // {name, laws: [...], exponent?, abelian?, contained_in?: [...]} or
  // {name, product: [ref-or-object, ...]}.  Product references are resolved
  // like load_variety arguments, relative to `base_dir`.
  Json    variety_to_json(Variety const& v);
  Variety variety_from_json(Json const& j, std::filesystem::path const& base_dir = {});

  // A builtin name (trivial, all, abelian, metabelian, abelian-exp<e>), an
  // inline basis "laws:[x1,x2];x1^3", or a path to a variety file.
  Variety load_variety(std::string const& ref, std::filesystem::path const& base_dir = {});

  // Whitespace- or ';'-separated tokens; a token naming an element label
  // denotes that element, anything else must be a comma-separated list of
  // indices.  The result is the subgroup generated by all of them.
  Subgroup parse_subgroup_spec(FiniteGroup const& g, std::string const& spec);

  Json subgroup_to_json(FiniteGroup const& g, Subgroup const& h);
  Json hom_to_json(Homomorphism const& f);

  std::string read_text(std::filesystem::path const& path);

}  // namespace domkit

#endif  // DOMKIT_IO_HPP_
