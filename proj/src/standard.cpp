#include "domkit/standard.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "domkit/products.hpp"

namespace domkit::standard {

  namespace {

    std::string power_label(std::string const& base, std::size_t i) {
      if (i == 0) {
        return "";
      }
      return i == 1 ? base : base + "^" + std::to_string(i);
    }

    std::string cycle_label(std::vector<std::uint32_t> const& p) {
      std::string       out;
      std::vector<char> seen(p.size(), 0);
      bool              wide = p.size() > 9;
      for (std::uint32_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) {
          continue;
        }
        out += "(";
        std::uint32_t j     = i;
        bool          first = true;
        while (!seen[j]) {
          seen[j] = 1;
          if (!first && wide) {
            out += ",";
          }
          out += std::to_string(j + 1);
          first = false;
          j     = p[j];
        }
        out += ")";
      }
      return out.empty() ? "e" : out;
    }

    std::size_t parse_size(std::string const& s, std::string const& name) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
        throw ValidationError("unknown group name '" + name + "'");
      }
      return std::stoul(s);
    }

  }  // namespace

  GroupPtr trivial() {
    return FiniteGroup::from_table(1, {0}, {"e"});
  }

  GroupPtr cyclic(std::size_t n) {
    if (n == 0) {
      throw ValidationError("cyclic group order must be positive");
    }
    std::vector<Elem>        t(n * n);
    std::vector<std::string> labels;
    for (Elem a = 0; a < n; ++a) {
      labels.push_back(a == 0 ? "e" : power_label("c", a));
      for (Elem b = 0; b < n; ++b) {
        t[a * n + b] = (a + b) % n;
      }
    }
    std::vector<Elem> gens;
    if (n > 1) {
      gens.push_back(1);
    }
    return FiniteGroup::from_table(n, std::move(t), std::move(labels), std::move(gens));
  }

  GroupPtr dihedral(std::size_t n) {
    if (n == 0) {
      throw ValidationError("dihedral group parameter must be positive");
    }
    std::size_t              order = 2 * n;
    std::vector<Elem>        t(order * order);
    std::vector<std::string> labels;
    for (Elem x = 0; x < order; ++x) {
      Elem a = x % n, b = x / n;
      std::string l = power_label("r", a) + (b ? "s" : "");
      labels.push_back(l.empty() ? "e" : l);
      for (Elem y = 0; y < order; ++y) {
        Elem c = y % n, d = y / n;
        Elem r = b ? (a + n - c) % n : (a + c) % n;
        t[x * order + y] = r + static_cast<Elem>(n) * ((b + d) % 2);
      }
    }
    return FiniteGroup::from_table(order, std::move(t), std::move(labels));
  }

  GroupPtr dicyclic(std::size_t n) {
    if (n < 1) {
      throw ValidationError("dicyclic group parameter must be positive");
    }
    std::size_t              m = 2 * n, order = 4 * n;
    std::vector<Elem>        t(order * order);
    std::vector<std::string> labels;
    for (Elem x = 0; x < order; ++x) {
      Elem i = x % m, j = x / m;
      std::string l = power_label("a", i) + (j ? "x" : "");
      labels.push_back(l.empty() ? "e" : l);
      for (Elem y = 0; y < order; ++y) {
        Elem k = y % m, l2 = y / m;
        Elem r;
        if (j == 0) {
          r = (i + k) % m + static_cast<Elem>(m) * l2;
        } else if (l2 == 0) {
          r = (i + m - k) % m + static_cast<Elem>(m);
        } else {
          r = (i + m - k + n) % m;
        }
        t[x * order + y] = r;
      }
    }
    return FiniteGroup::from_table(order, std::move(t), std::move(labels));
  }

  GroupPtr permutation_group(std::size_t degree,
                             std::vector<std::vector<std::uint32_t>> const& gens) {
    using Perm = std::vector<std::uint32_t>;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0u);
    for (auto const& p : gens) {
      Perm s = p;
      std::sort(s.begin(), s.end());
      if (s != id) {
        throw ValidationError("permutation generator is not a permutation of the given degree");
      }
    }
    auto compose = [degree](Perm const& a, Perm const& b) {
      Perm r(degree);
      for (std::size_t x = 0; x < degree; ++x) {
        r[x] = a[b[x]];
      }
      return r;
    };
    std::map<Perm, Elem> seen;
    std::vector<Perm>    list{id};
    seen[id] = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto const& s : gens) {
        Perm y = compose(list[i], s);
        if (!seen.count(y)) {
          seen[y] = 0;
          list.push_back(std::move(y));
        }
      }
    }
    std::sort(list.begin(), list.end());
    for (Elem i = 0; i < list.size(); ++i) {
      seen[list[i]] = i;
    }
    std::size_t              n = list.size();
    std::vector<Elem>        t(n * n);
    std::vector<std::string> labels;
    for (Elem a = 0; a < n; ++a) {
      labels.push_back(cycle_label(list[a]));
      for (Elem b = 0; b < n; ++b) {
        t[a * n + b] = seen.at(compose(list[a], list[b]));
      }
    }
    return FiniteGroup::from_table(n, std::move(t), std::move(labels));
  }

  GroupPtr symmetric(std::size_t n) {
    if (n <= 1) {
      return trivial();
    }
    std::vector<std::uint32_t> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0u);
    std::swap(transposition[0], transposition[1]);
    for (std::uint32_t i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
    }
    return permutation_group(n, {transposition, cycle});
  }

  GroupPtr alternating(std::size_t n) {
    if (n < 3) {
      return trivial();
    }
    std::vector<std::vector<std::uint32_t>> gens;
    for (std::uint32_t k = 2; k < n; ++k) {
      std::vector<std::uint32_t> p(n);
      std::iota(p.begin(), p.end(), 0u);
      p[0] = 1;
      p[1] = k;
      p[k] = 0;
      gens.push_back(std::move(p));
    }
    return permutation_group(n, gens);
  }

  GroupPtr abelian(std::vector<std::size_t> const& invariants) {
    GroupPtr g = trivial();
    for (std::size_t m : invariants) {
      g = g->is_trivial() ? cyclic(m) : direct_product(g, cyclic(m)).group;
    }
    return g;
  }

  GroupPtr by_name(std::string const& name) {
    if (auto x = name.find('x'); x != std::string::npos && x > 0 && name.rfind("Dic", 0) != 0) {
      return direct_product(by_name(name.substr(0, x)), by_name(name.substr(x + 1))).group;
    }
    if (name == "1" || name == "trivial") {
      return trivial();
    }
    if (name == "V4") {
      return abelian({2, 2});
    }
    if (name.rfind("Dic", 0) == 0) {
      return dicyclic(parse_size(name.substr(3), name));
    }
    if (name.size() < 2) {
      throw ValidationError("unknown group name '" + name + "'");
    }
    std::size_t k = parse_size(name.substr(1), name);
    switch (name[0]) {
      case 'C':
        return cyclic(k);
      case 'D':
        return dihedral(k);
      case 'S':
        return symmetric(k);
      case 'A':
        return alternating(k);
      case 'Q':
        if (k % 4 != 0 || k < 8) {
          throw ValidationError("quaternion-type group order must be a multiple of 4, at least 8");
        }
        return dicyclic(k / 4);
      default:
        throw ValidationError("unknown group name '" + name + "'");
    }
  }

}  // namespace domkit::standard
