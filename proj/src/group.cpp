#include "domkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace domkit {

  namespace {

    std::uint64_t fnv1a(std::span<Elem const> data, std::uint64_t h = 1469598103934665603ULL) {
      for (Elem x : data) {
        for (int i = 0; i < 4; ++i) {
          h ^= (x >> (8 * i)) & 0xFFu;
          h *= 1099511628211ULL;
        }
      }
      return h;
    }

    // Right-multiplication orbit of {e} under gens; for a group this is the
    // generated subgroup.
    std::vector<Elem> bfs_closure(FiniteGroup const& g, std::span<Elem const> gens) {
      std::vector<char> in(g.order(), 0);
      std::vector<Elem> out{FiniteGroup::identity};
      in[0] = 1;
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (Elem s : gens) {
          Elem y = g.mul(out[i], s);
          if (!in[y]) {
            in[y] = 1;
            out.push_back(y);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<Elem> const& gens_of(Subgroup const& h) {
      return (h.generators.empty() && h.elements.size() > 1) ? h.elements : h.generators;
    }

    // Closure over a raw table that has not been proven associative yet.
    std::vector<char> raw_closure(std::size_t n, std::vector<Elem> const& t,
                                  std::vector<Elem> const& gens) {
      std::vector<char> in(n, 0);
      std::vector<Elem> q{0};
      in[0] = 1;
      for (std::size_t i = 0; i < q.size(); ++i) {
        for (Elem s : gens) {
          Elem y = t[q[i] * n + s];
          if (!in[y]) {
            in[y] = 1;
            q.push_back(y);
          }
        }
      }
      return in;
    }

    std::string lbl(std::vector<std::string> const& labels, Elem a) {
      return a < labels.size() ? labels[a] : "g" + std::to_string(a);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  GroupPtr FiniteGroup::from_table(std::size_t              n,
                                   std::vector<Elem>        t,
                                   std::vector<std::string> labels,
                                   std::vector<Elem>        generators) {
    if (n == 0) {
      throw ValidationError("group axiom failed (nonempty): order must be positive");
    }
    if (t.size() != n * n) {
      throw ValidationError("table has " + std::to_string(t.size()) + " entries, expected "
                            + std::to_string(n * n));
    }
    if (!labels.empty() && labels.size() != n) {
      throw ValidationError("labels has " + std::to_string(labels.size())
                            + " entries, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= n) {
        std::ostringstream os;
        os << "group axiom failed (closure): " << lbl(labels, i / n) << "*"
           << lbl(labels, i % n) << " = " << t[i] << " is not an element";
        throw ValidationError(os.str());
      }
    }
    for (Elem g : generators) {
      if (g >= n) {
        throw ValidationError("generator index " + std::to_string(g) + " out of range");
      }
    }

    // Identity, then re-index it to 0.
    std::optional<Elem> e;
    for (Elem a = 0; a < n && !e; ++a) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = t[a * n + x] == x && t[x * n + a] == x;
      }
      if (ok) {
        e = a;
      }
    }
    if (!e) {
      throw ValidationError("group axiom failed (identity): no two-sided identity element");
    }
    if (*e != 0) {
      std::vector<Elem> p(n);
      std::iota(p.begin(), p.end(), Elem(0));
      std::swap(p[0], p[*e]);
      std::vector<Elem> t2(n * n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          t2[p[a] * n + p[b]] = p[t[a * n + b]];
        }
      }
      t = std::move(t2);
      if (!labels.empty()) {
        std::swap(labels[0], labels[*e]);
      }
      for (Elem& g : generators) {
        g = p[g];
      }
    }

    // Two-sided inverses.
    std::vector<Elem> inverses(n);
    for (Elem a = 0; a < n; ++a) {
      Elem const* r = t.data() + static_cast<std::size_t>(a) * n;
      auto        it = std::find(r, r + n, Elem(0));
      if (it == r + n) {
        throw ValidationError("group axiom failed (inverse): " + lbl(labels, a)
                              + " has no right inverse");
      }
      Elem b = static_cast<Elem>(it - r);
      if (t[b * n + a] != 0) {
        throw ValidationError("group axiom failed (inverse): " + lbl(labels, a) + "*"
                              + lbl(labels, b) + " = e but " + lbl(labels, b) + "*"
                              + lbl(labels, a) + " != e");
      }
      inverses[a] = b;
    }

    // Light's associativity test over a generating set: the elements s with
    // (xs)y = x(sy) for all x, y form a closed subset, so checking generators
    // suffices once they generate everything.
    std::vector<Elem> light_gens;
    {
      std::vector<char> in = raw_closure(n, t, light_gens);
      for (Elem a = 1; a < n; ++a) {
        if (!in[a]) {
          light_gens.push_back(a);
          in = raw_closure(n, t, light_gens);
        }
      }
    }
    for (Elem s : light_gens) {
      for (Elem x = 0; x < n; ++x) {
        Elem xs = t[x * n + s];
        for (Elem y = 0; y < n; ++y) {
          if (t[xs * n + y] != t[x * n + t[s * n + y]]) {
            std::ostringstream os;
            os << "group axiom failed (associativity): (" << lbl(labels, x) << "*"
               << lbl(labels, s) << ")*" << lbl(labels, y) << " != " << lbl(labels, x) << "*("
               << lbl(labels, s) << "*" << lbl(labels, y) << ")";
            throw ValidationError(os.str());
          }
        }
      }
    }

    if (!labels.empty()) {
      std::unordered_set<std::string> seen;
      for (auto const& l : labels) {
        if (!seen.insert(l).second) {
          throw ValidationError("duplicate element label '" + l + "'");
        }
      }
    }

    std::shared_ptr<FiniteGroup> g(new FiniteGroup());
    g->order_    = n;
    g->table_    = std::move(t);
    g->inverses_ = std::move(inverses);
    g->labels_   = std::move(labels);
    g->orders_.assign(n, 1);
    for (Elem a = 1; a < n; ++a) {
      std::uint32_t k = 1;
      for (Elem x = a; x != 0; x = g->mul(x, a)) {
        ++k;
      }
      g->orders_[a] = k;
    }
    if (!generators.empty()) {
      if (bfs_closure(*g, generators).size() != n) {
        throw ValidationError("supplied generators do not generate the group");
      }
      g->generators_ = std::move(generators);
    } else {
      std::vector<Elem> all(n);
      std::iota(all.begin(), all.end(), Elem(0));
      g->generators_ = greedy_generators(*g, all);
    }
    g->fingerprint_ = fnv1a(g->table_) ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL);
    return g;
  }

  GroupPtr FiniteGroup::from_rows(std::vector<std::vector<Elem>> const& rows,
                                  std::vector<std::string>              labels) {
    std::size_t       n = rows.size();
    std::vector<Elem> t;
    t.reserve(n * n);
    for (auto const& r : rows) {
      if (r.size() != n) {
        throw ValidationError("table is not square");
      }
      t.insert(t.end(), r.begin(), r.end());
    }
    return from_table(n, std::move(t), std::move(labels));
  }

  Elem FiniteGroup::pow(Elem a, std::int64_t e) const noexcept {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    e %= orders_[a];
    Elem r = identity;
    while (e > 0) {
      if (e & 1) {
        r = mul(r, a);
      }
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::vector<std::uint32_t> FiniteGroup::order_profile() const {
    std::vector<std::uint32_t> p = orders_;
    std::sort(p.begin(), p.end());
    return p;
  }

  std::string FiniteGroup::label(Elem a) const {
    return lbl(labels_, a);
  }

  std::optional<Elem> FiniteGroup::find_label(std::string_view s) const {
    for (Elem a = 0; a < labels_.size(); ++a) {
      if (labels_[a] == s) {
        return a;
      }
    }
    return std::nullopt;
  }

  bool FiniteGroup::is_abelian() const {
    for (Elem a : generators_) {
      for (Elem b : generators_) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::array<Elem, 3>> find_nonassociative_triple(FiniteGroup const& g) {
    Elem n = static_cast<Elem>(g.order());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem xy = g.mul(x, y);
        for (Elem z = 0; z < n; ++z) {
          if (g.mul(xy, z) != g.mul(x, g.mul(y, z))) {
            return std::array<Elem, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  bool Subgroup::contains(Elem x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }

  bool is_subset(Subgroup const& a, Subgroup const& b) {
    return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(),
                         a.elements.end());
  }

  Subgroup trivial_subgroup() {
    return Subgroup{{FiniteGroup::identity}, {}};
  }

  Subgroup whole_group(FiniteGroup const& g) {
    std::vector<Elem> all(g.order());
    std::iota(all.begin(), all.end(), Elem(0));
    return Subgroup{std::move(all), g.generators()};
  }

  Subgroup closure(FiniteGroup const& g, std::span<Elem const> gens) {
    for (Elem s : gens) {
      if (!g.valid(s)) {
        throw ValidationError("invalid element index " + std::to_string(s) + " (group order "
                              + std::to_string(g.order()) + ")");
      }
    }
    return Subgroup{bfs_closure(g, gens), {gens.begin(), gens.end()}};
  }

  Subgroup closure(FiniteGroup const& g, std::initializer_list<Elem> gens) {
    return closure(g, std::span<Elem const>(gens.begin(), gens.size()));
  }

  std::vector<Elem> greedy_generators(FiniteGroup const& g, std::span<Elem const> elements) {
    std::vector<Elem> cand(elements.begin(), elements.end());
    std::stable_sort(cand.begin(), cand.end(), [&g](Elem a, Elem b) {
      if (g.element_order(a) != g.element_order(b)) {
        return g.element_order(a) > g.element_order(b);
      }
      return a < b;
    });
    std::vector<Elem> gens;
    std::vector<char> in(g.order(), 0);
    in[0] = 1;
    std::vector<Elem> cur{FiniteGroup::identity};
    for (Elem c : cand) {
      if (in[c]) {
        continue;
      }
      gens.push_back(c);
      // Extend the closure: every old element times the new generator, and
      // every new element times all generators.
      std::size_t old = cur.size();
      for (std::size_t i = 0; i < old; ++i) {
        Elem y = g.mul(cur[i], c);
        if (!in[y]) {
          in[y] = 1;
          cur.push_back(y);
        }
      }
      for (std::size_t i = old; i < cur.size(); ++i) {
        for (Elem s : gens) {
          Elem y = g.mul(cur[i], s);
          if (!in[y]) {
            in[y] = 1;
            cur.push_back(y);
          }
        }
      }
      if (cur.size() == elements.size()) {
        break;
      }
    }
    return gens;
  }

  Subgroup make_subgroup(FiniteGroup const& g, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h{std::move(elements), {}};
    validate_subgroup(g, h);
    h.generators = greedy_generators(g, h.elements);
    return h;
  }

  void validate_subgroup(FiniteGroup const& g, Subgroup const& h) {
    if (h.elements.empty() || h.elements.front() != FiniteGroup::identity) {
      throw ValidationError("not a subgroup: identity missing");
    }
    if (!std::is_sorted(h.elements.begin(), h.elements.end())
        || std::adjacent_find(h.elements.begin(), h.elements.end()) != h.elements.end()) {
      throw ValidationError("not a subgroup: element list must be sorted and duplicate-free");
    }
    if (!g.valid(h.elements.back())) {
      throw ValidationError("invalid element index " + std::to_string(h.elements.back()));
    }
    std::vector<char> in(g.order(), 0);
    for (Elem x : h.elements) {
      in[x] = 1;
    }
    // Finite: closed under products implies subgroup.
    for (Elem x : h.elements) {
      for (Elem y : h.elements) {
        if (!in[g.mul(x, y)]) {
          throw ValidationError("not a subgroup: " + g.label(x) + "*" + g.label(y) + " = "
                                + g.label(g.mul(x, y)) + " is outside the set");
        }
      }
    }
    for (Elem s : h.generators) {
      if (!g.valid(s) || !in[s]) {
        throw ValidationError("subgroup generator " + std::to_string(s) + " is not an element");
      }
    }
    if (!h.generators.empty() && bfs_closure(g, h.generators).size() != h.elements.size()) {
      throw ValidationError("subgroup generators do not generate the listed elements");
    }
  }

  Subgroup normal_closure(FiniteGroup const& g, std::span<Elem const> s) {
    Subgroup          h = closure(g, s);
    std::vector<Elem> gens(s.begin(), s.end());
    bool              changed = true;
    while (changed) {
      changed = false;
      for (Elem x : g.generators()) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
          Elem c = g.conj(x, gens[i]);
          if (!h.contains(c)) {
            gens.push_back(c);
            h       = closure(g, gens);
            changed = true;
          }
        }
      }
    }
    return h;
  }

  Subgroup normalizer(FiniteGroup const& g, Subgroup const& h) {
    validate_subgroup(g, h);
    auto const&       gens = gens_of(h);
    std::vector<Elem> out;
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = std::all_of(gens.begin(), gens.end(),
                            [&](Elem s) { return h.contains(g.conj(x, s)); });
      if (ok) {
        out.push_back(x);
      }
    }
    Subgroup n{std::move(out), {}};
    n.generators = greedy_generators(g, n.elements);
    return n;
  }

  Subgroup centralizer(FiniteGroup const& g, Elem x) {
    std::vector<Elem> out;
    for (Elem y = 0; y < g.order(); ++y) {
      if (g.mul(x, y) == g.mul(y, x)) {
        out.push_back(y);
      }
    }
    Subgroup c{std::move(out), {}};
    c.generators = greedy_generators(g, c.elements);
    return c;
  }

  bool is_normal(FiniteGroup const& g, Subgroup const& h) {
    for (Elem x : g.generators()) {
      for (Elem s : gens_of(h)) {
        if (!h.contains(g.conj(x, s))) {
          return false;
        }
      }
    }
    return true;
  }

  Subgroup conjugate(FiniteGroup const& g, Elem x, Subgroup const& h) {
    if (!g.valid(x)) {
      throw ValidationError("invalid element index " + std::to_string(x));
    }
    Subgroup c;
    for (Elem y : h.elements) {
      c.elements.push_back(g.conj(x, y));
    }
    for (Elem y : h.generators) {
      c.generators.push_back(g.conj(x, y));
    }
    std::sort(c.elements.begin(), c.elements.end());
    return c;
  }

  Subgroup intersection(FiniteGroup const& g, Subgroup const& a, Subgroup const& b) {
    Subgroup r;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(r.elements));
    r.generators = greedy_generators(g, r.elements);
    return r;
  }

  Subgroup join(FiniteGroup const& g, Subgroup const& a, Subgroup const& b) {
    std::vector<Elem> gens = gens_of(a);
    gens.insert(gens.end(), gens_of(b).begin(), gens_of(b).end());
    Subgroup j   = closure(g, gens);
    j.generators = greedy_generators(g, j.elements);
    return j;
  }

  std::vector<std::vector<Elem>> cosets(FiniteGroup const& g, Subgroup const& h) {
    std::vector<char>              seen(g.order(), 0);
    std::vector<std::vector<Elem>> out;
    for (Elem x = 0; x < g.order(); ++x) {
      if (seen[x]) {
        continue;
      }
      std::vector<Elem> c;
      c.reserve(h.order());
      for (Elem y : h.elements) {
        Elem z = g.mul(x, y);
        seen[z] = 1;
        c.push_back(z);
      }
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return out;
  }

  std::vector<Subgroup> all_subgroups(FiniteGroup const& g) {
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup>       list;
    std::vector<Subgroup>       cyclic;
    for (Elem x = 0; x < g.order(); ++x) {
      Subgroup c = closure(g, {x});
      if (seen.insert(c.elements).second) {
        cyclic.push_back(c);
        list.push_back(c);
      }
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto const& z : cyclic) {
        if (is_subset(z, list[i])) {
          continue;
        }
        std::vector<Elem> gens = list[i].generators;
        gens.insert(gens.end(), z.generators.begin(), z.generators.end());
        Subgroup j = closure(g, gens);
        if (seen.insert(j.elements).second) {
          list.push_back(std::move(j));
        }
      }
    }
    for (auto& s : list) {
      s.generators = greedy_generators(g, s.elements);
    }
    std::sort(list.begin(), list.end(), [](Subgroup const& a, Subgroup const& b) {
      return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
    });
    return list;
  }

  std::vector<Subgroup> normal_subgroups(FiniteGroup const& g) {
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup>       list;
    std::vector<Subgroup>       minimal;
    for (Elem x = 0; x < g.order(); ++x) {
      Elem     one[] = {x};
      Subgroup c     = normal_closure(g, one);
      if (seen.insert(c.elements).second) {
        minimal.push_back(c);
        list.push_back(c);
      }
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto const& z : minimal) {
        if (is_subset(z, list[i])) {
          continue;
        }
        Subgroup j = join(g, list[i], z);
        if (seen.insert(j.elements).second) {
          list.push_back(std::move(j));
        }
      }
    }
    for (auto& s : list) {
      s.generators = greedy_generators(g, s.elements);
    }
    std::sort(list.begin(), list.end(), [](Subgroup const& a, Subgroup const& b) {
      return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
    });
    return list;
  }

  std::vector<Subgroup> subgroup_class_representatives(FiniteGroup const& g) {
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup>       reps;
    for (auto& h : all_subgroups(g)) {
      if (seen.count(h.elements)) {
        continue;
      }
      for (Elem x = 0; x < g.order(); ++x) {
        seen.insert(conjugate(g, x, h).elements);
      }
      reps.push_back(std::move(h));
    }
    return reps;
  }

  std::uint64_t group_exponent(FiniteGroup const& g) {
    std::uint64_t e = 1;
    for (auto o : g.element_orders()) {
      e = std::lcm(e, static_cast<std::uint64_t>(o));
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<Elem, Elem>> find_hom_failure(Homomorphism const& f) {
    auto const& a = *f.domain;
    auto const& c = *f.codomain;
    for (Elem x = 0; x < a.order(); ++x) {
      for (Elem y = 0; y < a.order(); ++y) {
        if (f(a.mul(x, y)) != c.mul(f(x), f(y))) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  bool is_homomorphism(Homomorphism const& f) {
    if (f.image.size() != f.domain->order()) {
      return false;
    }
    for (Elem v : f.image) {
      if (!f.codomain->valid(v)) {
        return false;
      }
    }
    return !find_hom_failure(f).has_value();
  }

  Homomorphism make_homomorphism(GroupPtr dom, GroupPtr cod, std::vector<Elem> image) {
    if (image.size() != dom->order()) {
      throw ValidationError("homomorphism image array has length " + std::to_string(image.size())
                            + ", expected " + std::to_string(dom->order()));
    }
    for (Elem v : image) {
      if (!cod->valid(v)) {
        throw ValidationError("homomorphism image " + std::to_string(v)
                              + " is not an element of the codomain");
      }
    }
    Homomorphism f{std::move(dom), std::move(cod), std::move(image)};
    if (auto bad = find_hom_failure(f)) {
      auto [x, y] = *bad;
      throw ValidationError("not a homomorphism: f(" + f.domain->label(x) + "*"
                            + f.domain->label(y) + ") != f(" + f.domain->label(x) + ")*f("
                            + f.domain->label(y) + ")");
    }
    return f;
  }

  Homomorphism identity_hom(GroupPtr g) {
    std::vector<Elem> img(g->order());
    std::iota(img.begin(), img.end(), Elem(0));
    return Homomorphism{g, g, std::move(img)};
  }

  Homomorphism trivial_hom(GroupPtr dom, GroupPtr cod) {
    std::vector<Elem> img(dom->order(), FiniteGroup::identity);
    return Homomorphism{std::move(dom), std::move(cod), std::move(img)};
  }

  Homomorphism compose(Homomorphism const& outer, Homomorphism const& inner) {
    if (inner.codomain->order() != outer.domain->order()) {
      throw PreconditionError("compose: codomain/domain mismatch");
    }
    std::vector<Elem> img(inner.image.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = outer(inner.image[i]);
    }
    return Homomorphism{inner.domain, outer.codomain, std::move(img)};
  }

  Subgroup kernel(Homomorphism const& f) {
    std::vector<Elem> k;
    for (Elem x = 0; x < f.image.size(); ++x) {
      if (f(x) == FiniteGroup::identity) {
        k.push_back(x);
      }
    }
    Subgroup s{std::move(k), {}};
    s.generators = greedy_generators(*f.domain, s.elements);
    return s;
  }

  Subgroup image_of(Homomorphism const& f) {
    return image_of(f, whole_group(*f.domain));
  }

  Subgroup image_of(Homomorphism const& f, Subgroup const& h) {
    std::vector<Elem> e;
    for (Elem x : h.elements) {
      e.push_back(f(x));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    Subgroup s{std::move(e), {}};
    s.generators = greedy_generators(*f.codomain, s.elements);
    return s;
  }

  Subgroup preimage(Homomorphism const& f, Subgroup const& k) {
    std::vector<Elem> e;
    for (Elem x = 0; x < f.image.size(); ++x) {
      if (k.contains(f(x))) {
        e.push_back(x);
      }
    }
    Subgroup s{std::move(e), {}};
    s.generators = greedy_generators(*f.domain, s.elements);
    return s;
  }

  bool is_injective(Homomorphism const& f) {
    return kernel(f).order() == 1;
  }

  bool is_surjective(Homomorphism const& f) {
    return image_of(f).order() == f.codomain->order();
  }

  Elem SubgroupGroup::local(Elem parent_elem) const {
    auto const& e  = inclusion.image;
    auto        it = std::lower_bound(e.begin(), e.end(), parent_elem);
    if (it == e.end() || *it != parent_elem) {
      throw PreconditionError("element " + std::to_string(parent_elem)
                              + " is not in the subgroup");
    }
    return static_cast<Elem>(it - e.begin());
  }

  SubgroupGroup subgroup_as_group(GroupPtr const& g, Subgroup const& h) {
    std::size_t                    n = h.order();
    std::unordered_map<Elem, Elem> local;
    for (Elem i = 0; i < n; ++i) {
      local[h.elements[i]] = i;
    }
    std::vector<Elem> t(n * n);
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        auto it = local.find(g->mul(h.elements[i], h.elements[j]));
        if (it == local.end()) {
          throw ValidationError("not a subgroup: product leaves the set");
        }
        t[i * n + j] = it->second;
      }
    }
    std::vector<std::string> labels;
    if (g->has_labels()) {
      for (Elem x : h.elements) {
        labels.push_back(g->label(x));
      }
    }
    std::vector<Elem> gens;
    for (Elem s : h.generators) {
      gens.push_back(local.at(s));
    }
    GroupPtr sub = FiniteGroup::from_table(n, std::move(t), std::move(labels), std::move(gens));
    return SubgroupGroup{sub, Homomorphism{sub, g, h.elements}};
  }

  std::string describe(FiniteGroup const& g, Subgroup const& h) {
    std::string s = "{";
    for (std::size_t i = 0; i < h.elements.size(); ++i) {
      s += (i ? ", " : "") + g.label(h.elements[i]);
    }
    return s + "}";
  }

}  // namespace domkit
