#include "domkit/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "domkit/bounds.hpp"
#include "domkit/catalog.hpp"
#include "domkit/extension.hpp"
#include "domkit/io.hpp"
#include "domkit/products.hpp"
#include "domkit/standard.hpp"
#include "domkit/witness.hpp"
#include "domkit/wreath.hpp"

namespace domkit::cli {

  namespace {

    std::string hex(std::uint64_t v) {
      std::ostringstream s;
      s << std::hex << std::setw(16) << std::setfill('0') << v;
      return s.str();
    }

    std::uint64_t fnv(std::string const& s) {
      std::uint64_t h = 1469598103934665603ULL;
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      return h;
    }

    struct Common {
      std::string format = "text";
      std::size_t order_cap = 0;
      std::uint64_t node_budget = 0;
      unsigned      jobs        = 1;

      Limits limits() const {
        Limits l;
        if (char const* env = std::getenv("DOMKIT_ORDER_CAP")) {
          try {
            l.order_cap = std::stoull(env);
          } catch (std::exception const&) {
            throw ValidationError(std::string("DOMKIT_ORDER_CAP is not a number: ") + env);
          }
        }
        if (order_cap) {
          l.order_cap = order_cap;
        }
        if (node_budget) {
          l.node_budget = node_budget;
        }
        l.jobs = jobs ? jobs : 1;
        return l;
      }
    };

    // Accumulates the report: inputs with fingerprints, then the result.
    class Report {
     public:
      Report(std::string command, Common const& c) : command_(std::move(command)), json_(c.format == "json") {}

      void input(std::string const& kind, std::string const& ref, std::string const& fingerprint) {
        Json j;
        j["kind"]        = kind;
        j["ref"]         = ref;
        j["fingerprint"] = fingerprint;
        inputs_.push_back(std::move(j));
      }

      Json& result() {
        return result_;
      }
      std::ostringstream& text() {
        return text_;
      }

      void emit(std::ostream& out) const {
        if (json_) {
          Json j;
          j["tool"]    = "domkit";
          j["version"] = kVersion;
          j["command"] = command_;
          j["inputs"]  = inputs_;
          j["result"]  = result_;
          out << j.dump(2) << "\n";
        } else {
          out << text_.str();
        }
      }

     private:
      std::string        command_;
      bool               json_;
      Json               inputs_ = Json::array();
      Json               result_ = Json::object();
      std::ostringstream text_;
    };

    GroupPtr read_group(Report& rep, std::string const& kind, std::string const& ref) {
      GroupPtr g;
      if (ref.rfind("name:", 0) == 0) {
        g = standard::by_name(ref.substr(5));
      } else {
        g = load_group(ref);
      }
      rep.input(kind, ref, hex(g->fingerprint()));
      return g;
    }

    Variety read_variety(Report& rep, std::string const& ref) {
      Variety v = load_variety(ref);
      rep.input("variety", ref, hex(fnv(variety_to_json(v).dump())));
      return v;
    }

    std::vector<Target> read_catalog(Report& rep, std::string const& dir, Limits const& limits) {
      Catalog c = load_catalog(dir, limits);
      auto    t = c.targets();
      rep.input("catalog", dir, hex(catalog_fingerprint(t)));
      return t;
    }

    Json sub_json(FiniteGroup const& g, Subgroup const& h) {
      return subgroup_to_json(g, h);
    }

    Json pair_json(ContributingPair const& p) {
      Json j;
      j["target"]    = p.target_id;
      j["f"]         = p.f.image;
      j["g"]         = p.g.image;
      j["equalizer"] = p.equalizer.elements;
      return j;
    }

    Json approx_json(FiniteGroup const& g, ApproxResult const& a) {
      Json j;
      j["subgroup"]            = sub_json(g, a.subgroup);
      j["vacuous"]             = a.vacuous;
      j["targets_examined"]    = a.targets_examined;
      j["catalog_fingerprint"] = hex(a.catalog_fingerprint);
      Json pairs               = Json::array();
      for (auto const& p : a.contributing_pairs) {
        pairs.push_back(pair_json(p));
      }
      j["contributing_pairs"] = std::move(pairs);
      return j;
    }

    Json separation_json(SeparationResult const& s) {
      Json j;
      j["found"]    = s.found;
      j["strategy"] = s.strategy;
      if (s.found) {
        j["m_order"] = s.m->order();
        j["lambda"]  = s.lambda.image;
        j["rho"]     = s.rho.image;
      }
      j["targets_used"] = s.targets_used;
      j["unseparated"]  = s.unseparated;
      return j;
    }

    Json bigone_json(FiniteGroup const& g, BigOneReport const& b) {
      Json j;
      j["status"]  = to_string(b.status);
      j["detail"]  = b.detail;
      j["n"]       = sub_json(g, b.n);
      j["d"]       = sub_json(g, b.d);
      j["d_exact"] = b.d_exact;
      j["hd"]      = sub_json(g, b.hd);
      if (b.transversal) {
        j["transversal"] = b.transversal->lift;
        Json c;
        c["section"]       = b.transversal_check.section;
        c["identity_lift"] = b.transversal_check.identity_lift;
        c["in_normalizer"] = b.transversal_check.in_normalizer;
        c["orbit_rule"]    = b.transversal_check.orbit_rule;
        j["transversal_check"] = std::move(c);
      }
      if (b.extension && !b.gamma.empty()) {
        WreathProduct kw    = kk_wreath(*b.extension);
        Json          gamma = Json::array();
        for (auto const& x : b.gamma) {
          gamma.push_back(kw.label(x));
        }
        j["gamma"] = std::move(gamma);
      }
      if (b.separation) {
        j["separation"] = separation_json(*b.separation);
      }
      if (b.target) {
        j["target_order"]      = b.target->order();
        j["target_compact"]    = b.target_compact;
        j["target_in_variety"] = b.target_in_variety;
        j["f"]                 = b.f.image;
        j["g"]                 = b.g.image;
        j["equalizer"]         = sub_json(g, b.equalizer);
        j["agree_on_h"]        = b.agree_on_h;
        j["meets_n_in_d"]      = b.meets_n_in_d;
      }
      if (b.status == WitnessStatus::certified || b.status == WitnessStatus::upper_bound_only) {
        j["upper"] = sub_json(g, b.upper);
      }
      return j;
    }

    Json sandwich_json(FiniteGroup const& g, SandwichReport const& r) {
      Json j;
      j["status"]            = to_string(r.status);
      j["h"]                 = sub_json(g, r.h);
      j["n"]                 = sub_json(g, r.n);
      j["kernel_nontrivial"] = r.kernel_nontrivial;
      j["d"]                 = sub_json(g, r.d);
      j["d_provenance"]      = to_string(r.d_provenance);
      j["d_reason"]          = r.d_reason;
      j["nh"]                = sub_json(g, r.nh);
      j["d_prime"]           = sub_json(g, r.d_prime);
      j["hd_prime"]          = sub_json(g, r.hd_prime);
      j["lower"]             = sub_json(g, r.lower);
      j["upper"]             = sub_json(g, r.upper);
      if (r.dominion) {
        j["dominion"] = sub_json(g, *r.dominion);
      }
      if (r.approx) {
        j["approx"] = approx_json(g, *r.approx);
      }
      if (r.stable_under_growth) {
        j["stable_under_growth"] = *r.stable_under_growth;
      }
      j["rules_fired"] = r.rules_fired;
      Json ws          = Json::array();
      for (auto const& w : r.witnesses) {
        Json x;
        x["rule"]         = w.rule;
        x["description"]  = w.description;
        x["target_order"] = w.target->order();
        x["compact"]      = w.compact;
        x["f"]            = w.f.image;
        x["g"]            = w.g.image;
        x["equalizer"]    = w.equalizer.elements;
        ws.push_back(std::move(x));
      }
      j["witnesses"] = std::move(ws);
      if (r.transversal_witness) {
        j["transversal_witness"] = bigone_json(g, *r.transversal_witness);
      }
      j["notes"] = r.notes;
      return j;
    }

    void sandwich_text(std::ostream& o, FiniteGroup const& g, SandwichReport const& r) {
      o << "status: " << to_string(r.status) << "\n";
      if (r.dominion) {
        o << "dominion: " << describe(g, *r.dominion) << "\n";
      }
      o << "H: " << describe(g, r.h) << "\n";
      o << "N: " << describe(g, r.n) << "\n";
      o << "D: " << describe(g, r.d) << " (" << to_string(r.d_provenance) << ", " << r.d_reason << ")\n";
      o << "lower: " << describe(g, r.lower) << "\n";
      o << "upper: " << describe(g, r.upper) << "\n";
      if (r.approx) {
        o << "approx: " << describe(g, r.approx->subgroup) << (r.approx->vacuous ? " (vacuous)" : "") << "\n";
      }
      o << "rules:";
      for (auto const& x : r.rules_fired) {
        o << " " << x;
      }
      o << "\n";
      for (auto const& w : r.witnesses) {
        o << "witness " << w.rule << ": target of order " << w.target->order()
          << (w.compact ? " (generated subgroup)" : "") << ", equalizer of order " << w.equalizer.order() << "\n";
      }
      for (auto const& n : r.notes) {
        o << "note: " << n << "\n";
      }
    }

    Json group_summary(FiniteGroup const& g) {
      Json j;
      j["order"]       = g.order();
      j["abelian"]     = g.is_abelian();
      j["exponent"]    = group_exponent(g);
      j["fingerprint"] = hex(g.fingerprint());
      j["generators"]  = g.generators();
      return j;
    }

    // The subcommand tree; each leaf stores its action.
    struct Commands {
      Common                     common;
      std::function<int(std::ostream&)> action;

      std::string group, subgroup, variety, catalog, out, left, right, base, top, omega = "regular";
      std::string extension, kernel, transversal = "default", m, d, h_spec, name, growth;
      std::size_t max_order = 0, catalog_order = 0;
    };

    void add_common(CLI::App* app, Common& c) {
      app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
      app->add_option("--order-cap", c.order_cap, "Largest group order to materialize");
      app->add_option("--node-budget", c.node_budget, "Backtracking nodes per homomorphism search");
      app->add_option("--jobs", c.jobs, "Worker threads");
    }

    std::vector<Target> targets_for(Report& rep, Commands const& cmd, Variety const& v, Limits const& limits) {
      if (!cmd.catalog.empty()) {
        return read_catalog(rep, cmd.catalog, limits);
      }
      if (cmd.catalog_order) {
        Catalog c = build_catalog(v, cmd.catalog_order, {}, limits);
        auto    t = c.targets();
        rep.input("catalog", "built:" + std::to_string(cmd.catalog_order), hex(catalog_fingerprint(t)));
        return t;
      }
      return {};
    }

    int do_group_make(Commands& c, std::ostream& out) {
      Report   rep("group make", c.common);
      GroupPtr g = standard::by_name(c.name);
      if (!c.out.empty()) {
        save_group(*g, c.out);
      }
      rep.result() = group_summary(*g);
      rep.result()["group"] = group_to_json(*g);
      rep.text() << c.name << ": order " << g->order() << "\n";
      if (c.out.empty() && c.common.format == "text") {
        rep.text() << group_to_json(*g).dump() << "\n";
      }
      rep.emit(out);
      return kOk;
    }

    int do_group_inspect(Commands& c, std::ostream& out) {
      Report   rep("group inspect", c.common);
      GroupPtr g    = read_group(rep, "group", c.group);
      auto     subs = all_subgroups(*g);
      auto     ns   = normal_subgroups(*g);
      rep.result()  = group_summary(*g);
      rep.result()["element_orders"]   = g->element_orders();
      rep.result()["subgroups"]        = subs.size();
      rep.result()["normal_subgroups"] = ns.size();
      auto& t = rep.text();
      t << "order: " << g->order() << "\n";
      t << "abelian: " << (g->is_abelian() ? "true" : "false") << "\n";
      t << "exponent: " << group_exponent(*g) << "\n";
      t << "subgroups: " << subs.size() << " (" << ns.size() << " normal)\n";
      t << "fingerprint: " << hex(g->fingerprint()) << "\n";
      rep.emit(out);
      return kOk;
    }

    int do_group_quotient(Commands& c, std::ostream& out) {
      Report        rep("group quotient", c.common);
      Limits        l = c.common.limits();
      GroupPtr      g = read_group(rep, "group", c.group);
      Subgroup      n = parse_subgroup_spec(*g, c.subgroup);
      QuotientGroup q = quotient(g, n, l);
      if (!c.out.empty()) {
        save_group(*q.group, c.out);
      }
      rep.result()               = group_summary(*q.group);
      rep.result()["projection"] = q.projection.image;
      rep.result()["group"]      = group_to_json(*q.group);
      rep.text() << "quotient of order " << q.group->order() << " by " << describe(*g, n) << "\n";
      rep.emit(out);
      return kOk;
    }

    int do_group_product(Commands& c, std::ostream& out) {
      Report        rep("group product", c.common);
      Limits        l  = c.common.limits();
      GroupPtr      a  = read_group(rep, "left", c.left);
      GroupPtr      b  = read_group(rep, "right", c.right);
      DirectProduct dp = direct_product(a, b, l);
      if (!c.out.empty()) {
        save_group(*dp.group, c.out);
      }
      rep.result()          = group_summary(*dp.group);
      rep.result()["group"] = group_to_json(*dp.group);
      rep.text() << "direct product of order " << dp.group->order() << "\n";
      rep.emit(out);
      return kOk;
    }

    int do_verbal(Commands& c, std::ostream& out) {
      Report   rep("verbal", c.common);
      Limits   l = c.common.limits();
      GroupPtr g = read_group(rep, "group", c.group);
      Variety  v = read_variety(rep, c.variety);
      Subgroup s = verbal_subgroup(*g, v, l);
      rep.result()["verbal_subgroup"] = sub_json(*g, s);
      rep.text() << describe(*g, s) << "\n";
      rep.emit(out);
      return kOk;
    }

    int do_member(Commands& c, std::ostream& out) {
      Report   rep("member", c.common);
      Limits   l = c.common.limits();
      GroupPtr g = read_group(rep, "group", c.group);
      Variety  v = read_variety(rep, c.variety);
      bool     m = is_member(*g, v, l);
      rep.result()["member"] = m;
      rep.text() << (m ? "true" : "false") << "\n";
      rep.emit(out);
      return kOk;
    }

    int do_wreath(Commands& c, std::ostream& out) {
      Report      rep("wreath", c.common);
      Limits      l = c.common.limits();
      GroupPtr    n = read_group(rep, "base", c.base);
      GroupPtr    k = read_group(rep, "top", c.top);
      GroupAction act;
      if (c.omega == "regular") {
        act = regular_action(k);
      } else if (c.omega.rfind("cosets:", 0) == 0) {
        act = coset_action(k, parse_subgroup_spec(*k, c.omega.substr(7)));
      } else {
        throw ValidationError("--omega must be 'regular' or 'cosets:<subgroup>'");
      }
      WreathGroup w = omega_wreath(n, act, l);
      if (!c.out.empty()) {
        save_group(*w.flat, c.out);
      }
      rep.result()                 = group_summary(*w.flat);
      rep.result()["degree"]       = act.degree;
      rep.result()["top_embedding"] = w.top_embedding.image;
      rep.result()["group"]        = group_to_json(*w.flat);
      rep.text() << "wreath product of order " << w.flat->order() << " over " << act.degree << " points\n";
      rep.emit(out);
      return kOk;
    }

    int do_embed(Commands& c, std::ostream& out) {
      Report      rep("embed", c.common);
      Limits      l = c.common.limits();
      GroupPtr    g;
      std::string kernel = c.kernel;
      if (!c.extension.empty()) {
        Json j;
        try {
          j = Json::parse(read_text(c.extension));
        } catch (Json::parse_error const& e) {
          throw ValidationError(c.extension + ": " + e.what());
        }
        if (!j.contains("group") || !j.contains("kernel")) {
          throw ValidationError(c.extension + ": an extension file needs 'group' and 'kernel'");
        }
        if (j["group"].is_string()) {
          std::filesystem::path p = j["group"].get<std::string>();
          if (p.is_relative()) {
            p = std::filesystem::path(c.extension).parent_path() / p;
          }
          g = load_group(p);
        } else {
          g = group_from_json(j["group"]);
        }
        kernel = j["kernel"].get<std::string>();
        rep.input("extension", c.extension, hex(g->fingerprint()));
      } else if (!c.group.empty()) {
        g = read_group(rep, "group", c.group);
      } else {
        throw ValidationError("embed needs --extension or --group with --kernel");
      }
      Subgroup              n   = parse_subgroup_spec(*g, kernel);
      ExtensionPresentation ext = make_extension(g, n, l);
      Transversal           t;
      if (c.transversal == "default") {
        t = default_transversal(ext);
      } else if (c.transversal == "orbit") {
        Subgroup h = c.h_spec.empty() ? trivial_subgroup() : parse_subgroup_spec(*g, c.h_spec);
        Subgroup d = c.d.empty() ? trivial_subgroup() : parse_subgroup_spec(*g, c.d);
        t          = orbit_transversal(ext, h, d);
      } else {
        throw ValidationError("--transversal must be 'default' or 'orbit'");
      }
      KKEmbedding e = kk_embedding(ext, t, l);
      bool        compatible = compose(e.wreath.top_projection, e.map) == ext.projection;
      rep.result()["wreath_order"]          = e.wreath.flat->order();
      rep.result()["kernel_order"]          = n.order();
      rep.result()["transversal"]           = t.lift;
      rep.result()["map"]                   = e.map.image;
      rep.result()["injective"]             = is_injective(e.map);
      rep.result()["homomorphism"]          = is_homomorphism(e.map);
      rep.result()["projection_compatible"] = compatible;
      Json labels                           = Json::array();
      for (Elem x = 0; x < g->order(); ++x) {
        labels.push_back(e.wreath.flat->label(e.map(x)));
      }
      rep.result()["images"] = std::move(labels);
      auto& o                = rep.text();
      o << "embedding into a wreath product of order " << e.wreath.flat->order() << "\n";
      for (Elem x = 0; x < g->order(); ++x) {
        o << "  " << g->label(x) << " -> " << e.wreath.flat->label(e.map(x)) << "\n";
      }
      o << "injective homomorphism: " << (is_injective(e.map) && is_homomorphism(e.map) ? "yes" : "no") << "\n";
      o << "compatible with the projection: " << (compatible ? "yes" : "no") << "\n";
      rep.emit(out);
      return kOk;
    }

    int do_mckay(Commands& c, std::ostream& out) {
      Report   rep("witness mckay", c.common);
      Limits   l = c.common.limits();
      GroupPtr g = read_group(rep, "group", c.group);
      Subgroup h = parse_subgroup_spec(*g, c.subgroup);
      GroupPtr m = read_group(rep, "m", c.m);
      std::optional<Variety> v;
      if (!c.variety.empty()) {
        v = read_variety(rep, c.variety);
      }
      McKayWitness w = mckay_witness(g, h, m, v ? &*v : nullptr, l);
      rep.result()["target_order"] = w.target->order();
      rep.result()["compact"]      = w.compact;
      rep.result()["points"]       = w.wreath.degree();
      rep.result()["n"]            = w.wreath.label(w.n);
      rep.result()["f"]            = w.f.image;
      rep.result()["g"]            = w.g.image;
      rep.result()["equalizer"]    = sub_json(*g, w.equalizer);
      rep.text() << "K of order " << w.target->order() << (w.compact ? " (generated subgroup)" : "") << "\n";
      rep.text() << "n = " << w.wreath.label(w.n) << "\n";
      rep.text() << "equalizer: " << describe(*g, w.equalizer) << "\n";
      rep.emit(out);
      return kOk;
    }

    int do_bigone(Commands& c, std::ostream& out) {
      Report              rep("witness bigone", c.common);
      Limits              l       = c.common.limits();
      GroupPtr            g       = read_group(rep, "group", c.group);
      Subgroup            h       = parse_subgroup_spec(*g, c.subgroup);
      Variety             v       = read_variety(rep, c.variety);
      std::vector<Target> targets = targets_for(rep, c, v, l);
      if (!v.is_product()) {
        throw PreconditionError("the variety must be a product");
      }
      auto [nv, qv] = v.split();
      Subgroup      n = verbal_subgroup(*g, qv, l);
      Subgroup      d;
      bool          exact = false;
      if (!c.d.empty()) {
        d = parse_subgroup_spec(*g, c.d);
      } else {
        std::vector<Target> inner;
        for (auto const& t : targets) {
          if (is_member(*t.group, nv, l)) {
            inner.push_back(t);
          }
        }
        InnerDominion id = inner_dominion(g, n, intersection(*g, h, n), nv, inner, l);
        d                = id.subgroup;
        exact            = id.provenance == Provenance::exact;
      }
      std::vector<Target> inner;
      for (auto const& t : targets) {
        if (is_member(*t.group, nv, l)) {
          inner.push_back(t);
        }
      }
      BigOneReport b = bigone_witness(g, h, v, d, exact, inner, l);
      rep.result()   = bigone_json(*g, b);
      auto& o        = rep.text();
      o << "status: " << to_string(b.status) << "\n";
      if (!b.detail.empty()) {
        o << "detail: " << b.detail << "\n";
      }
      o << "N: " << describe(*g, b.n) << "\n";
      o << "D: " << describe(*g, b.d) << (exact ? " (exact)" : "") << "\n";
      if (b.target) {
        o << "target of order " << b.target->order() << (b.target_compact ? " (generated subgroup)" : "") << "\n";
        o << "equalizer: " << describe(*g, b.equalizer) << "\n";
      }
      if (b.status == WitnessStatus::certified || b.status == WitnessStatus::upper_bound_only) {
        o << "dominion " << (b.status == WitnessStatus::certified ? "=" : "<=") << " " << describe(*g, b.upper)
          << "\n";
      }
      rep.emit(out);
      return kOk;
    }

    int do_approx(Commands& c, std::ostream& out) {
      Report              rep("dominion approx", c.common);
      Limits              l       = c.common.limits();
      GroupPtr            g       = read_group(rep, "group", c.group);
      Subgroup            h       = parse_subgroup_spec(*g, c.subgroup);
      Variety             v       = read_variety(rep, c.variety);
      std::vector<Target> targets = targets_for(rep, c, v, l);
      ApproxResult        a       = dominion_upper_approx(g, h, &v, targets, l);
      rep.result()                = approx_json(*g, a);
      rep.text() << describe(*g, a.subgroup) << (a.vacuous ? " (vacuous: empty catalog)" : "") << "\n";
      for (auto const& p : a.contributing_pairs) {
        rep.text() << "  pair into " << p.target_id << ": equalizer " << describe(*g, p.equalizer) << "\n";
      }
      rep.emit(out);
      return kOk;
    }

    int do_certify(Commands& c, std::ostream& out) {
      Report              rep("dominion certify", c.common);
      Limits              l       = c.common.limits();
      GroupPtr            g       = read_group(rep, "group", c.group);
      Subgroup            h       = parse_subgroup_spec(*g, c.subgroup);
      Variety             v       = read_variety(rep, c.variety);
      std::vector<Target> targets = targets_for(rep, c, v, l);
      CertifyOptions      opts;
      if (!c.growth.empty()) {
        opts.growth_targets = read_catalog(rep, c.growth, l);
      }
      SandwichReport r = certify(g, h, v, targets, opts, l);
      rep.result()     = sandwich_json(*g, r);
      sandwich_text(rep.text(), *g, r);
      rep.emit(out);
      return kOk;
    }

    int do_hunt(Commands& c, std::ostream& out) {
      Report              rep("dominion hunt", c.common);
      Limits              l = c.common.limits();
      Variety             v = read_variety(rep, c.variety);
      std::vector<Target> targets, growth;
      if (!c.catalog.empty()) {
        targets = read_catalog(rep, c.catalog, l);
      } else {
        targets = build_catalog(v, c.max_order, {}, l).targets();
        rep.input("catalog", "built:" + std::to_string(c.max_order), hex(catalog_fingerprint(targets)));
      }
      if (!c.growth.empty()) {
        growth = read_catalog(rep, c.growth, l);
      } else {
        growth = build_catalog(v, 2 * c.max_order, {}, l).targets();
        rep.input("growth-catalog", "built:" + std::to_string(2 * c.max_order), hex(catalog_fingerprint(growth)));
      }
      auto found = hunt_candidates(v, c.max_order, targets, targets, growth, l);
      Json list  = Json::array();
      for (auto const& r : found) {
        Json j     = sandwich_json(*r.group, r);
        j["group"] = group_summary(*r.group);
        list.push_back(std::move(j));
        rep.text() << "candidate in a group of order " << r.group->order() << ": H = " << describe(*r.group, r.h)
                   << ", approx = " << describe(*r.group, r.approx->subgroup) << "\n";
      }
      rep.result()["candidates"] = std::move(list);
      rep.text() << found.size() << " candidate(s); none is certified\n";
      rep.emit(out);
      return kOk;
    }

    int do_catalog_build(Commands& c, std::ostream& out, std::ostream& err) {
      Report  rep("catalog build", c.common);
      Limits  l = c.common.limits();
      Variety v = read_variety(rep, c.variety);
      Catalog cat = build_catalog(v, c.max_order, {}, l, [&](std::string const& m) { err << m << "\n"; });
      if (!c.out.empty()) {
        save_catalog(cat, c.out);
      }
      Json list = Json::array();
      for (auto const& e : cat.entries) {
        Json j;
        j["provenance"]  = e.provenance;
        j["order"]       = e.group->order();
        j["fingerprint"] = hex(e.group->fingerprint());
        list.push_back(std::move(j));
        rep.text() << std::setw(4) << e.group->order() << "  " << e.provenance << "\n";
      }
      rep.result()["entries"]     = std::move(list);
      rep.result()["fingerprint"] = hex(catalog_fingerprint(cat.targets()));
      rep.text() << cat.entries.size() << " groups\n";
      rep.emit(out);
      return kOk;
    }

    int do_catalog_list(Commands& c, std::ostream& out) {
      Report  rep("catalog list", c.common);
      Limits  l   = c.common.limits();
      Catalog cat = load_catalog(c.catalog, l);
      rep.input("catalog", c.catalog, hex(catalog_fingerprint(cat.targets())));
      Json list = Json::array();
      for (auto const& e : cat.entries) {
        Json j;
        j["provenance"]  = e.provenance;
        j["order"]       = e.group->order();
        j["memberships"] = e.memberships;
        list.push_back(std::move(j));
        rep.text() << std::setw(4) << e.group->order() << "  " << e.provenance << "\n";
      }
      rep.result()["variety"] = cat.variety.name();
      rep.result()["entries"] = std::move(list);
      rep.text() << cat.entries.size() << " groups in " << cat.variety.name() << "\n";
      rep.emit(out);
      return kOk;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite group toolkit: wreath products, verbal subgroups and dominion bounds", "domkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Commands c;
    std::ostream* errp = &err;

    auto leaf = [&](CLI::App* parent, std::string const& name, std::string const& desc,
                    std::function<int(std::ostream&)> fn) {
      CLI::App* s = parent->add_subcommand(name, desc);
      add_common(s, c.common);
      s->callback([&c, fn] { c.action = fn; });
      return s;
    };
    auto req = [](CLI::App* s, std::string const& flag, std::string& var, std::string const& desc) {
      s->add_option(flag, var, desc)->required();
    };

    CLI::App* group = app.add_subcommand("group", "Group files")->require_subcommand(1);
    auto*     make  = leaf(group, "make", "Write a standard group (C<n>, D<n>, S<n>, A<n>, Q8, AxB)",
                           [&](std::ostream& o) { return do_group_make(c, o); });
    req(make, "--name", c.name, "Group name");
    make->add_option("--out", c.out, "Output file");
    auto* inspect = leaf(group, "inspect", "Summarize a group", [&](std::ostream& o) { return do_group_inspect(c, o); });
    req(inspect, "--group", c.group, "Group file or name:<group>");
    auto* quot = leaf(group, "quotient", "Quotient by a normal subgroup",
                      [&](std::ostream& o) { return do_group_quotient(c, o); });
    req(quot, "--group", c.group, "Group file");
    req(quot, "--subgroup", c.subgroup, "Normal subgroup specifier");
    quot->add_option("--out", c.out, "Output file");
    auto* prod = leaf(group, "product", "Direct product", [&](std::ostream& o) { return do_group_product(c, o); });
    req(prod, "--left", c.left, "Group file");
    req(prod, "--right", c.right, "Group file");
    prod->add_option("--out", c.out, "Output file");

    auto* verbal = leaf(&app, "verbal", "Verbal subgroup", [&](std::ostream& o) { return do_verbal(c, o); });
    req(verbal, "--group", c.group, "Group file");
    req(verbal, "--variety", c.variety, "Variety file, builtin name or laws:<w>;<w>");
    auto* member = leaf(&app, "member", "Variety membership", [&](std::ostream& o) { return do_member(c, o); });
    req(member, "--group", c.group, "Group file");
    req(member, "--variety", c.variety, "Variety");

    auto* wreath = leaf(&app, "wreath", "Wreath product", [&](std::ostream& o) { return do_wreath(c, o); });
    req(wreath, "--base", c.base, "Base group file");
    req(wreath, "--top", c.top, "Top group file");
    wreath->add_option("--omega", c.omega, "regular or cosets:<subgroup of top>");
    wreath->add_option("--out", c.out, "Output file");

    auto* embed = leaf(&app, "embed", "Kaloujnine-Krasner embedding", [&](std::ostream& o) { return do_embed(c, o); });
    embed->add_option("--extension", c.extension, "Extension file {group, kernel}");
    embed->add_option("--group", c.group, "Group file (with --kernel)");
    embed->add_option("--kernel", c.kernel, "Normal subgroup specifier");
    embed->add_option("--transversal", c.transversal, "default or orbit");
    embed->add_option("--subgroup", c.h_spec, "H for the orbit transversal");
    embed->add_option("--d", c.d, "D for the orbit transversal");

    CLI::App* witness = app.add_subcommand("witness", "Witness constructions")->require_subcommand(1);
    auto*     mckay   = leaf(witness, "mckay", "Two maps with equalizer H", [&](std::ostream& o) { return do_mckay(c, o); });
    req(mckay, "--group", c.group, "Group file");
    req(mckay, "--subgroup", c.subgroup, "Subgroup specifier");
    req(mckay, "--m", c.m, "Nontrivial group M");
    mckay->add_option("--variety", c.variety, "Product variety to check against");
    auto* bigone = leaf(witness, "bigone", "Transversal witness for dom = HD",
                        [&](std::ostream& o) { return do_bigone(c, o); });
    req(bigone, "--group", c.group, "Group file");
    req(bigone, "--subgroup", c.subgroup, "Subgroup specifier");
    req(bigone, "--variety", c.variety, "Product variety");
    bigone->add_option("--catalog", c.catalog, "Catalog directory");
    bigone->add_option("--catalog-order", c.catalog_order, "Build a catalog up to this order");
    bigone->add_option("--d", c.d, "D instead of the inner dominion");

    CLI::App* dominion = app.add_subcommand("dominion", "Dominion bounds")->require_subcommand(1);
    for (auto [name, desc] : {std::pair{"approx", "Catalog upper approximation"},
                              std::pair{"certify", "Certified sandwich report"}}) {
      bool  isapprox = std::string(name) == "approx";
      auto* s        = leaf(dominion, name, desc, [&c, isapprox](std::ostream& o) {
        return isapprox ? do_approx(c, o) : do_certify(c, o);
      });
      req(s, "--group", c.group, "Group file");
      req(s, "--subgroup", c.subgroup, "Subgroup specifier");
      req(s, "--variety", c.variety, "Variety");
      s->add_option("--catalog", c.catalog, "Catalog directory");
      s->add_option("--catalog-order", c.catalog_order, "Build a catalog up to this order");
      if (!isapprox) {
        s->add_option("--growth-catalog", c.growth, "Larger catalog for the stability check");
      }
    }
    auto* hunt = leaf(dominion, "hunt", "Search for candidate nontrivial dominions",
                      [&](std::ostream& o) { return do_hunt(c, o); });
    req(hunt, "--variety", c.variety, "Product variety");
    hunt->add_option("--max-order", c.max_order, "Largest group order scanned")->required();
    hunt->add_option("--catalog", c.catalog, "Catalog directory (default: built to --max-order)");
    hunt->add_option("--growth-catalog", c.growth, "Default: built to twice --max-order");

    CLI::App* catalog = app.add_subcommand("catalog", "Group catalogs")->require_subcommand(1);
    auto*     build   = leaf(catalog, "build", "Build a catalog",
                             [&](std::ostream& o) { return do_catalog_build(c, o, *errp); });
    req(build, "--variety", c.variety, "Variety");
    build->add_option("--max-order", c.max_order, "Largest order")->required();
    build->add_option("--out", c.out, "Output directory");
    auto* list = leaf(catalog, "list", "List a catalog", [&](std::ostream& o) { return do_catalog_list(c, o); });
    req(list, "--catalog", c.catalog, "Catalog directory");

    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (CLI::CallForVersion const&) {
      out << kVersion << "\n";
      return kOk;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
    try {
      return c.action ? c.action(out) : kInputError;
    } catch (LimitError const& e) {
      err << "limit: " << e.what() << "\n";
      return kLimitError;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << "\n";
      return kInternal;
    }
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
  }

}  // namespace domkit::cli
