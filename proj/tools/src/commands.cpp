#include "commands.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "descriptor.hpp"
#include "erlab/bounds.hpp"
#include "erlab/errors.hpp"
#include "erlab/family_io.hpp"
#include "erlab/field.hpp"
#include "erlab/optimisation.hpp"

namespace erlab::cli {

namespace {

std::string join_indices(const std::vector<std::size_t>& idx, char sep = ' ') {
  std::string out;
  for (auto i : idx) {
    if (!out.empty()) out += sep;
    out += std::to_string(i);
  }
  return out;
}

std::string composition_text(const Composition& m) {
  std::string out;
  for (auto x : m) {
    if (!out.empty()) out += '+';
    out += std::to_string(x);
  }
  return out;
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["sign"] = to_string(c.sign);
  j["lo"] = c.enclosure.lo_double();
  j["hi"] = c.enclosure.hi_double();
  j["precision"] = c.precision;
  return j;
}

Json census_json(const CensusReport& c) {
  Json j;
  j["M"] = dec(c.M);
  j["N0"] = c.N0;
  j["N1"] = c.N1 ? Json(*c.N1) : Json(nullptr);
  j["N2"] = c.N2 ? Json(*c.N2) : Json(nullptr);
  j["extremal"] = c.extremal.size();
  return j;
}

std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

/// Where a command takes its family from: --file, or the full universe from the flags.
struct FamilySource {
  UniverseFlags universe;
  std::string file;

  void add(CLI::App& app) {
    universe.add(app);
    app.add_option("--file", file, "Family file instead of the full universe");
  }
  Family load(const RunConfig& cfg) const {
    if (!file.empty()) {
      if (universe.given()) throw ConfigError("give either --file or universe flags, not both");
      return read_family_file(file);
    }
    return full_family(universe.universe(), cfg.enumeration_cap);
  }
};

void add_enumerate(CLI::App& app, const RunConfig& cfg, Action& action) {
  struct State {
    UniverseFlags u;
    bool count_only = false;
  };
  auto st = std::make_shared<State>();
  auto* sub = app.add_subcommand("enumerate", "List or count the elements of a universe");
  st->u.add(*sub);
  sub->add_flag("--count-only", st->count_only, "Print only the number of elements");
  sub->callback([st, &cfg, &action] {
    action = [st, &cfg] {
      const Universe u = st->u.universe();
      Report rep;
      rep.json["universe"] = universe_json(u);
      if (st->count_only) {
        const BigCount n = u.element_count();
        rep.json["count"] = dec(n);
        rep.csv_header = {"count"};
        rep.csv_rows = {{dec(n)}};
        rep.text = dec(n);
        return rep;
      }
      const Family f = full_family(u, cfg.enumeration_cap);
      rep.json["count"] = dec(BigCount(static_cast<unsigned long>(f.size())));
      Json elems = Json::array();
      rep.csv_header = {"index", "element"};
      for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string e = format_element(u, f[i]);
        elems.push_back(e);
        rep.csv_rows.push_back({std::to_string(i), e});
      }
      rep.json["elements"] = std::move(elems);
      rep.text = format_family(f);
      return rep;
    };
  });
}

void add_count(CLI::App& app, const RunConfig& cfg, Action& action) {
  struct State {
    std::string file;
    unsigned r = 3;
    unsigned t = 1;
    bool oracle = false;
  };
  auto st = std::make_shared<State>();
  auto* sub = app.add_subcommand("count", "Count the (r,t)-colourings of a family file");
  sub->add_option("file", st->file, "Family file")->required();
  sub->add_option("-r", st->r, "Number of colours")->required();
  sub->add_option("-t", st->t, "Intersection threshold")->capture_default_str();
  sub->add_flag("--oracle", st->oracle, "Cross-check against the brute-force count");
  sub->callback([st, &cfg, &action] {
    action = [st, &cfg] {
      const Family f = read_family_file(st->file);
      const ConflictGraph g = build_conflict_graph(f, st->t);
      const CountResult res = count_colourings(g, st->r, cfg.counting());
      if (st->oracle) {
        const BigCount check = count_bruteforce(g, st->r, cfg.counting());
        if (check != res.count) {
          throw Error("oracle mismatch: " + dec(res.count) + " vs brute force " + dec(check));
        }
      }
      Report rep;
      rep.json["count"] = dec(res.count);
      rep.json["method"] = to_string(res.method);
      rep.json["vertices"] = g.vertex_count();
      rep.json["edges"] = g.edge_count();
      rep.json["components"] = res.components;
      rep.json["oracle_checked"] = st->oracle;
      rep.json["duplicates_removed"] = f.duplicates_removed();
      rep.csv_header = {"count", "method", "vertices", "edges", "components", "oracle_checked"};
      rep.csv_rows = {{dec(res.count), to_string(res.method), std::to_string(g.vertex_count()),
                       std::to_string(g.edge_count()), std::to_string(res.components),
                       st->oracle ? "true" : "false"}};
      return rep;
    };
  });
}

void add_census(CLI::App& app, const RunConfig& cfg, Action& action) {
  struct State {
    FamilySource src;
    unsigned t = 1;
    bool list = false;
  };
  auto st = std::make_shared<State>();
  auto* sub = app.add_subcommand("census", "Maximal t-intersecting families and their statistics");
  st->src.add(*sub);
  sub->add_option("-t", st->t, "Intersection threshold")->required();
  sub->add_flag("--list", st->list, "Include every maximal family");
  sub->callback([st, &cfg, &action] {
    action = [st, &cfg] {
      const Family ground = st->src.load(cfg);
      const MaximalContext ctx = MaximalContext::of(ground, st->t, cfg.census());
      const CensusReport& c = ctx.report;
      const EmpiricalCheck eq1 = check_3col_empirical(c, cfg.precision_bits);
      const bool applicable = eq1.sign != EmpiricalSign::Inapplicable;
      Report rep;
      rep.json["universe"] = universe_json(ground.universe());
      rep.json["ground_size"] = ground.size();
      rep.json["t"] = st->t;
      const Json cj = census_json(c);
      for (auto& [k, v] : cj.items()) rep.json[k] = v;
      rep.json["eq1_sign"] = to_string(eq1.sign);
      rep.json["eq1_lo"] = applicable ? Json(eq1.lo.get_d()) : Json(nullptr);
      rep.json["eq1_hi"] = applicable ? Json(eq1.hi.get_d()) : Json(nullptr);
      if (st->list) {
        Json fams = Json::array();
        rep.csv_header = {"index", "size", "extremal", "members"};
        for (std::size_t i = 0; i < ctx.maximal.size(); ++i) {
          const auto idx = ctx.maximal[i].indices();
          const bool ext = idx.size() == c.N0;
          Json members = Json::array();
          for (auto m : idx) members.push_back(format_element(ground.universe(), ground[m]));
          fams.push_back({{"size", idx.size()}, {"extremal", ext}, {"members", members}});
          rep.csv_rows.push_back({std::to_string(i), std::to_string(idx.size()), ext ? "true" : "false",
                                  join_indices(idx)});
        }
        rep.json["families"] = std::move(fams);
      } else {
        rep.csv_header = {"M", "N0", "N1", "N2", "extremal", "eq1_sign", "eq1_lo", "eq1_hi"};
        rep.csv_rows = {{dec(c.M), std::to_string(c.N0), opt_str(c.N1), opt_str(c.N2),
                         std::to_string(c.extremal.size()), to_string(eq1.sign),
                         applicable ? fmt_double(eq1.lo.get_d()) : "", applicable ? fmt_double(eq1.hi.get_d()) : ""}};
      }
      return rep;
    };
  });
}

void add_certify(CLI::App& app, const RunConfig& cfg, Action& action) {
  struct State {
    UniverseFlags u;
    long t = 1;
    long r = 3;
    std::string which = "eq1";
  };
  auto st = std::make_shared<State>();
  auto* sub = app.add_subcommand("certify", "Certified sign of a threshold inequality");
  st->u.add(*sub);
  sub->add_option("-t", st->t, "Intersection threshold")->capture_default_str();
  sub->add_option("-r", st->r, "Number of colours")->capture_default_str();
  sub->add_option("--which", st->which, "eq1, delta, delta-margin, perm-bound, vector-margin or eta")
      ->check(CLI::IsMember({"eq1", "delta", "delta-margin", "perm-bound", "vector-margin", "eta"}))
      ->capture_default_str();
  sub->callback([st, &cfg, &action] {
    action = [st, &cfg] {
      const UniverseFlags& u = st->u;
      if (st->which == "eta") {
        if (u.k_opt->count() == 0) throw ConfigError("-k is required here");
        const long eta = sets_eta(u.k, st->t);
        Report rep;
        rep.json["which"] = st->which;
        rep.json["k"] = u.k;
        rep.json["t"] = st->t;
        rep.json["eta"] = eta;
        rep.csv_header = {"which", "eta"};
        rep.csv_rows = {{"eta", std::to_string(eta)}};
        return rep;
      }
      if (!u.given()) throw ConfigError("choose a setting with --set, --vs or --perm");
      if (u.n_opt->count() == 0) throw ConfigError("-n is required");
      const long n = u.n, k = u.k, t = st->t, r = st->r;
      const bool has_k = u.k_opt->count() > 0;
      const auto need_k = [&] {
        if (!has_k) throw ConfigError("-k is required here");
      };
      ParameterPoint p;
      if (u.perm) {
        p = ParameterPoint::permutations(n, t, r);
      } else if (u.vs) {
        if (u.q_opt->count() == 0) throw ConfigError("-q is required with --vs");
        need_k();
        p = ParameterPoint::vectors(u.q, n, k, t, r);
      } else {
        need_k();
        p = ParameterPoint::sets(n, k, t, r);
      }
      if (p.needs_slack()) p.slack = parse_rational(cfg.slack);

      Report rep;
      rep.json["which"] = st->which;
      rep.json["setting"] = to_string(p.setting);
      rep.json["n"] = n;
      if (!u.perm) rep.json["k"] = k;
      if (u.vs) rep.json["q"] = u.q;
      rep.json["t"] = t;
      rep.json["r"] = r;
      if (p.slack) rep.json["slack"] = to_string(*p.slack);

      Certificate c;
      std::optional<Certificate> gate;
      if (st->which == "eq1") {
        c = certify_3col_inequality(p, cfg.precision_bits);
      } else if (st->which == "delta") {
        const DeltaReport d = certify_delta(p, cfg.precision_bits);
        c = d.delta;
        gate = d.gate;
      } else if (st->which == "delta-margin") {
        need_k();
        c = certify_sign([&](unsigned prec) { return sets_delta_margin(n, k, t, r, prec); }, cfg.precision_bits);
      } else if (st->which == "perm-bound") {
        c = certify_permutation_bound(n, t, cfg.precision_bits);
      } else {
        if (!u.vs) throw ConfigError("vector-margin needs --vs");
        need_k();
        c = certify_vector_margin(n, k, u.q, cfg.precision_bits);
      }
      const Json cj = certificate_json(c);
      for (auto& [key, v] : cj.items()) rep.json[key] = v;
      rep.csv_header = {"which", "sign", "lo", "hi", "precision", "gate_sign"};
      rep.csv_rows = {{st->which, to_string(c.sign), fmt_double(c.enclosure.lo_double()),
                       fmt_double(c.enclosure.hi_double()), std::to_string(c.precision),
                       gate ? to_string(gate->sign) : ""}};
      if (gate) rep.json["gate"] = certificate_json(*gate);
      if (c.sign == Sign::Inconclusive) rep.exit_code = 4;
      return rep;
    };
  });
}

Json profile_json(const MultiplicityProfile& prof) {
  Json hist = Json::object();
  for (const auto& [m, count] : prof.histogram) hist[std::to_string(m)] = count;
  return {{"histogram", hist}, {"correction", to_string(prof.correction)}};
}

void add_construct(CLI::App& app, const RunConfig&, Action& action) {
  struct State {
    std::string config;
    std::string inline_json;
    std::string output;
  };
  auto st = std::make_shared<State>();
  auto* sub = app.add_subcommand("construct", "Build a family from a JSON construction descriptor");
  auto* c = sub->add_option("--config", st->config, "Descriptor file");
  auto* j = sub->add_option("--json", st->inline_json, "Descriptor text");
  c->excludes(j);
  sub->add_option("--output", st->output, "Also write the family file here");
  sub->callback([st, &action] {
    action = [st] {
      Construction con;
      if (!st->config.empty()) {
        con = build_construction_file(st->config);
      } else if (!st->inline_json.empty()) {
        Json d;
        try {
          d = Json::parse(st->inline_json);
        } catch (const Json::exception& e) {
          throw ConfigError(std::string("descriptor: ") + e.what());
        }
        con = build_construction(d);
      } else {
        throw ConfigError("construct needs --config or --json");
      }
      const std::string text = format_family(con.result.family);
      if (!st->output.empty()) {
        std::ofstream out(st->output);
        if (!out) throw ConfigError("cannot write " + st->output);
        out << text;
      }
      const MultiplicityProfile prof = multiplicity_profile(con.result);
      Report rep;
      rep.json["kind"] = con.kind;
      rep.json["universe"] = universe_json(con.universe);
      rep.json["size"] = con.result.family.size();
      Json sizes = Json::array(), centres = Json::array();
      for (const auto& s : con.result.stars) sizes.push_back(s.size());
      for (const auto& cc : con.centres) centres.push_back(format_centre(con.universe, cc));
      rep.json["star_sizes"] = sizes;
      rep.json["centres"] = centres;
      if (con.W) rep.json["W"] = format_element(con.universe, *con.W);
      rep.json["profile"] = profile_json(prof);
      rep.json["family"] = text;
      rep.csv_header = {"multiplicity", "members"};
      for (const auto& [m, count] : prof.histogram) rep.csv_rows.push_back({std::to_string(m), std::to_string(count)});
      rep.text = text;
      return rep;
    };
  });
}

Json compositions_json(const std::vector<Composition>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m);
  return out;
}

std::string compositions_text(const std::vector<Composition>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += '|';
    out += composition_text(m);
  }
  return out;
}

void add_opt(CLI::App& app, const RunConfig&, Action& action) {
  struct State {
    long r = 0;
    bool brute = false;
  };
  auto st = std::make_shared<State>();
  auto* sub = app.add_subcommand("opt", "Maximum product of positive parts summing to r");
  sub->add_option("-r", st->r, "Sum of the parts")->required();
  sub->add_flag("--brute", st->brute, "Also search every partition (r <= 40)");
  sub->callback([st, &action] {
    action = [st] {
      const BigCount value = opt_value(st->r);
      const auto argmax = opt_structure(st->r);
      Report rep;
      rep.json["r"] = st->r;
      rep.json["value"] = dec(value);
      rep.json["argmax"] = compositions_json(argmax);
      rep.csv_header = {"r", "value", "argmax", "brute_value", "agree"};
      std::vector<std::string> row{std::to_string(st->r), dec(value), compositions_text(argmax), "", ""};
      if (st->brute) {
        const OptResult b = opt_bruteforce(st->r);
        const bool agree = b.value == value && b.argmax == argmax;
        rep.json["brute"] = {{"value", dec(b.value)}, {"argmax", compositions_json(b.argmax)}, {"agree", agree}};
        row[3] = dec(b.value);
        row[4] = agree ? "true" : "false";
        if (!agree) throw Error("closed form and exhaustive search disagree");
      }
      rep.csv_rows = {row};
      return rep;
    };
  });
}

void add_vsopt(CLI::App& app, const RunConfig&, Action& action) {
  auto s = std::make_shared<unsigned>(2);
  auto* sub = app.add_subcommand("vsopt", "Pair-budget comparison of multiplicity vectors");
  sub->add_option("-s", *s, "Number of stars, 2..9")->required();
  sub->callback([s, &action] {
    action = [s] {
      const VsOptResult res = vsopt_check(*s);
      Report rep;
      rep.json["s"] = *s;
      rep.json["holds"] = res.holds;
      rep.json["equality_cases"] = compositions_json(res.equality_cases);
      Json rows = Json::array();
      rep.csv_header = {"multiset", "comparison"};
      for (const auto& m : res.feasible) {
        const int cmp = vsopt_compare(*s, m);
        rows.push_back({{"multiset", m}, {"comparison", cmp}});
        rep.csv_rows.push_back({composition_text(m), std::to_string(cmp)});
      }
      rep.json["feasible"] = std::move(rows);
      return rep;
    };
  });
}

Report search_report(const SearchResult& res, const Family& ground, unsigned r, unsigned t) {
  Report rep;
  rep.json["method"] = to_string(res.method);
  rep.json["r"] = r;
  rep.json["t"] = t;
  rep.json["ground_size"] = ground.size();
  rep.json["max_count"] = dec(res.max_count);
  const Bitset full = Bitset::full(ground.size());
  bool full_attains = false;
  Json argmax = Json::array();
  rep.csv_header = {"index", "size", "count", "members"};
  for (std::size_t i = 0; i < res.argmax.size(); ++i) {
    const auto idx = res.argmax[i].indices();
    if (res.argmax[i] == full) full_attains = true;
    argmax.push_back(idx);
    rep.csv_rows.push_back({std::to_string(i), std::to_string(idx.size()), dec(res.max_count), join_indices(idx)});
  }
  rep.json["argmax_count"] = res.argmax.size();
  rep.json["full_family_attains"] = full_attains;
  rep.json["families_examined"] = dec(res.families_examined);
  rep.json["families_pruned"] = dec(res.families_pruned);
  rep.json["verified"] = res.verified;
  rep.json["argmax"] = std::move(argmax);
  return rep;
}

void add_search(CLI::App& app, const RunConfig& cfg, Action& action) {
  auto* search = app.add_subcommand("search", "Optimal-family search and typicality statistics");
  search->require_subcommand(1);

  struct Exhaustive {
    FamilySource src;
    unsigned t = 1, r = 3, max_ground = 20;
    bool prune = false;
  };
  auto ex = std::make_shared<Exhaustive>();
  auto* e = search->add_subcommand("exhaustive", "Every subfamily of the ground family");
  ex->src.add(*e);
  e->add_option("-t", ex->t)->required();
  e->add_option("-r", ex->r)->required();
  e->add_option("--max-ground", ex->max_ground, "Largest ground family searched")->capture_default_str();
  e->add_flag("--prune", ex->prune, "Skip repeated degree sequences (heuristic)");
  e->callback([ex, &cfg, &action] {
    action = [ex, &cfg] {
      SearchOptions opt = cfg.search();
      opt.max_ground = ex->max_ground;
      opt.degree_pruning = ex->prune;
      if (ex->src.file.empty()) {
        const Universe u = ex->src.universe.universe();
        check_threshold(u, ex->t);
        if (u.element_count() > BigCount(ex->max_ground)) {
          throw CapacityError("universe has " + dec(u.element_count()) + " members, above the " +
                              std::to_string(ex->max_ground) + "-member exhaustive cap; try search unions");
        }
      }
      const Family ground = ex->src.load(cfg);
      return search_report(exhaustive_optimal(ground, ex->t, ex->r, opt), ground, ex->r, ex->t);
    };
  });

  struct Unions {
    UniverseFlags u;
    unsigned t = 1, r = 3, max_parts = 2;
    std::uint64_t budget = 1'000'000;
  };
  auto un = std::make_shared<Unions>();
  auto* w = search->add_subcommand("unions", "Every union of at most max-parts maximal families");
  un->u.add(*w);
  w->add_option("-t", un->t)->required();
  w->add_option("-r", un->r)->required();
  w->add_option("--max-parts", un->max_parts)->capture_default_str();
  w->add_option("--budget", un->budget, "Most candidate unions")->capture_default_str();
  w->callback([un, &cfg, &action] {
    action = [un, &cfg] {
      SearchOptions opt = cfg.search();
      opt.union_budget = un->budget;
      const Universe u = un->u.universe();
      const Family ground = full_family(u, cfg.enumeration_cap);
      return search_report(unions_of_maximal_search(u, un->t, un->r, un->max_parts, opt), ground, un->r, un->t);
    };
  });

  struct Typ {
    FamilySource src;
    std::string config;
    unsigned t = 1, r = 3;
    std::string scope = "family";
  };
  auto ty = std::make_shared<Typ>();
  auto* y = search->add_subcommand("typicality", "Classify every colouring as typical or atypical");
  ty->src.add(*y);
  y->add_option("--config", ty->config, "Construction descriptor; its star data enables the sandwich check");
  y->add_option("-t", ty->t)->required();
  y->add_option("-r", ty->r)->required();
  y->add_option("--scope", ty->scope, "Census of the family itself or of its whole universe")
      ->check(CLI::IsMember({"family", "universe"}))
      ->capture_default_str();
  y->callback([ty, &cfg, &action] {
    action = [ty, &cfg] {
      std::optional<Construction> con;
      Family f;
      if (!ty->config.empty()) {
        if (ty->src.universe.given() || !ty->src.file.empty()) throw ConfigError("--config excludes other sources");
        con = build_construction_file(ty->config);
        f = con->result.family;
      } else {
        f = ty->src.load(cfg);
      }
      const CensusScope scope = ty->scope == "universe" ? CensusScope::Universe : CensusScope::Family;
      const TypicalityReport t =
          typicality_report(f, ty->r, ty->t, cfg.search(), scope, con ? &con->result : nullptr);
      Report rep;
      rep.json["r"] = ty->r;
      rep.json["t"] = ty->t;
      rep.json["family_size"] = f.size();
      rep.json["scope"] = ty->scope;
      rep.json["typical"] = dec(t.typical);
      rep.json["atypical"] = dec(t.atypical);
      rep.json["total"] = dec(t.total);
      rep.json["census"] = census_json(t.census);
      rep.json["phi_sum"] = t.phi_sum ? Json(dec(*t.phi_sum)) : Json(nullptr);
      rep.json["phi_max"] = t.phi_max ? Json(dec(*t.phi_max)) : Json(nullptr);
      rep.json["sandwich"] = t.sandwich ? Json(*t.sandwich) : Json(nullptr);
      rep.csv_header = {"typical", "atypical", "total", "phi_sum", "phi_max", "sandwich"};
      rep.csv_rows = {{dec(t.typical), dec(t.atypical), dec(t.total), t.phi_sum ? dec(*t.phi_sum) : "",
                       t.phi_max ? dec(*t.phi_max) : "", t.sandwich ? (*t.sandwich ? "true" : "false") : ""}};
      return rep;
    };
  });
}

void add_compare(CLI::App& app, const RunConfig&, Action& action) {
  auto* compare = app.add_subcommand("compare", "Exact star-union product comparisons");
  compare->require_subcommand(1);

  struct Swap {
    bool set = false;
    unsigned n = 0, k = 0, t = 0, r = 0;
    std::string centres, to;
    std::size_t swap = 0;
  };
  auto sw = std::make_shared<Swap>();
  auto* s = compare->add_subcommand("star-swap", "Replace one star centre by a disjoint one");
  s->add_flag("--set", sw->set, "Set families (the only setting supported)");
  s->add_option("-n", sw->n)->required();
  s->add_option("-k", sw->k)->required();
  s->add_option("-t", sw->t)->required();
  s->add_option("-r", sw->r)->required();
  s->add_option("--centres", sw->centres, "Centres before the swap, e.g. \"1,2;1,3\"")->required();
  s->add_option("--swap", sw->swap, "1-based position of the replaced centre (default: last)");
  s->add_option("--to", sw->to, "Replacement centre, e.g. \"4,5\"")->required();
  s->callback([sw, &action] {
    action = [sw] {
      const auto before = parse_set_centres(sw->n, sw->centres);
      const std::size_t pos = sw->swap == 0 ? before.size() : sw->swap;
      if (pos < 1 || pos > before.size()) throw ConfigError("--swap must name one of the centres");
      const KSet after = parse_set_centres(sw->n, sw->to).at(0);
      const SwapReport rep0 = compare_star_swap(sw->n, sw->k, sw->t, sw->r, before, pos - 1, after);
      Report rep;
      rep.json["holds"] = rep0.holds;
      rep.json["min_ratio"] = to_string(rep0.min_ratio);
      rep.json["partitions"] = dec(rep0.partitions);
      Json partners = Json::array();
      for (auto p : rep0.partners) partners.push_back(p + 1);
      rep.json["partners"] = partners;
      Json rows = Json::array();
      rep.csv_header = {"sizes", "phi_before", "phi_after", "ratio", "exceptional", "holds"};
      for (const auto& row : rep0.rows) {
        rows.push_back({{"sizes", row.sizes},
                        {"phi_before", dec(row.phi_before)},
                        {"phi_after", dec(row.phi_after)},
                        {"ratio", to_string(row.ratio)},
                        {"exceptional", row.exceptional},
                        {"holds", row.holds}});
        rep.csv_rows.push_back({composition_text(row.sizes), dec(row.phi_before), dec(row.phi_after),
                                to_string(row.ratio), row.exceptional ? "true" : "false",
                                row.holds ? "true" : "false"});
      }
      rep.json["rows"] = std::move(rows);
      return rep;
    };
  });

  struct Four {
    bool set = false;
    unsigned n = 0, k = 0, t = 0, r = 0;
    std::string centres;
  };
  auto fo = std::make_shared<Four>();
  auto* f = compare->add_subcommand("4v22", "Split a part of size 4 into two parts of size 2");
  f->add_flag("--set", fo->set, "Set families (the only setting supported)");
  f->add_option("-n", fo->n)->required();
  f->add_option("-k", fo->k)->required();
  f->add_option("-t", fo->t)->required();
  f->add_option("-r", fo->r)->required();
  f->add_option("--centres", fo->centres, "All ceil(r/3) centres, e.g. \"1;2;3\"")->required();
  f->callback([fo, &action] {
    action = [fo] {
      const FourVsTwoTwoReport r0 = compare_4v22(fo->n, fo->k, fo->t, fo->r, parse_set_centres(fo->n, fo->centres));
      Report rep;
      rep.json["holds"] = r0.holds;
      rep.json["before_sizes"] = r0.before_sizes;
      rep.json["after_sizes"] = r0.after_sizes;
      rep.json["phi_before"] = dec(r0.phi_before);
      rep.json["phi_after"] = dec(r0.phi_after);
      rep.csv_header = {"before_sizes", "after_sizes", "phi_before", "phi_after", "holds"};
      rep.csv_rows = {{composition_text(r0.before_sizes), composition_text(r0.after_sizes), dec(r0.phi_before),
                       dec(r0.phi_after), r0.holds ? "true" : "false"}};
      return rep;
    };
  });
}

}  // namespace

void register_commands(CLI::App& app, const RunConfig& cfg, Action& action) {
  add_enumerate(app, cfg, action);
  add_count(app, cfg, action);
  add_census(app, cfg, action);
  add_certify(app, cfg, action);
  add_construct(app, cfg, action);
  add_opt(app, cfg, action);
  add_vsopt(app, cfg, action);
  add_search(app, cfg, action);
  add_compare(app, cfg, action);
}

}  // namespace erlab::cli
