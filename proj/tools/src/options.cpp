#include "options.hpp"

#include "erlab/errors.hpp"
#include "erlab/field.hpp"
#include "erlab/interval.hpp"

namespace erlab::cli {

SearchOptions RunConfig::search() const {
  SearchOptions opt;
  opt.counting = counting();
  opt.census = census();
  opt.jobs = jobs;
  return opt;
}

void RunConfig::validate() const {
  if (jobs < 1) throw ConfigError("--jobs must be at least 1");
  if (subset_bits < 1 || subset_bits > 25) throw ConfigError("--subset-bits must lie in 1..25");
  if (oracle_cap < 1 || census_cap < 1 || enumeration_cap < 1) throw ConfigError("caps must be positive");
  if (precision_bits < kMinPrecisionBits) throw ConfigError("--precision-bits must be at least 64");
  parse_rational(slack);
}

void add_global_flags(CLI::App& app, RunConfig& cfg) {
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  app.add_option("--format", cfg.format, "Output format: json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("json|csv|text [json]")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads for counting, census and search")->capture_default_str();
  app.add_option("--subset-bits", cfg.subset_bits, "Largest component handled by the subset programme")
      ->capture_default_str();
  app.add_option("--oracle-cap", cfg.oracle_cap, "Most brute-force colour assignments")->capture_default_str();
  app.add_option("--census-cap", cfg.census_cap, "Most maximal families enumerated")->capture_default_str();
  app.add_option("--enumeration-cap", cfg.enumeration_cap, "Most universe elements enumerated")
      ->capture_default_str();
  app.add_option("--precision-bits", cfg.precision_bits, "Largest working precision of certified intervals")
      ->envname("ERLAB_PRECISION_BITS")
      ->capture_default_str();
  app.add_option("--slack", cfg.slack, "Factor on catalog N1 values that carry an unquantified o(1)")
      ->capture_default_str();
}

void UniverseFlags::add(CLI::App& app, bool need_k) {
  auto* s = app.add_flag("--set", set, "k-subsets of [n]");
  auto* v = app.add_flag("--vs", vs, "k-dimensional subspaces of GF(q)^n");
  auto* p = app.add_flag("--perm", perm, "permutations of [n]");
  s->excludes(v)->excludes(p);
  v->excludes(p);
  n_opt = app.add_option("-n", n, "Ground size or ambient dimension");
  if (need_k) k_opt = app.add_option("-k", k, "Member size or dimension");
  q_opt = app.add_option("-q", q, "Field order (vectors)");
}

Setting UniverseFlags::setting() const {
  if (vs) return Setting::Vectors;
  if (perm) return Setting::Permutations;
  return Setting::Sets;
}

Universe UniverseFlags::universe() const {
  if (!given()) throw ConfigError("choose a universe with --set, --vs or --perm");
  if (!n_opt || n_opt->count() == 0) throw ConfigError("-n is required");
  if (perm) return Universe::permutations(n);
  if (!k_opt || k_opt->count() == 0) throw ConfigError("-k is required");
  if (set) return Universe::sets(n, k);
  if (!q_opt || q_opt->count() == 0) throw ConfigError("-q is required with --vs");
  return Universe::vectors(GaloisField::make(q), n, k);
}

Json universe_json(const Universe& u) {
  Json j;
  j["setting"] = to_string(u.setting);
  if (u.setting == Setting::Vectors) j["q"] = u.field->order();
  j["n"] = u.n;
  if (u.setting != Setting::Permutations) j["k"] = u.k;
  return j;
}

}  // namespace erlab::cli
