#include "descriptor.hpp"

#include <fstream>
#include <sstream>

#include "erlab/errors.hpp"
#include "erlab/family_io.hpp"
#include "erlab/field.hpp"

namespace erlab::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

unsigned to_unsigned(const std::string& s) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw ConfigError("not a number: '" + s + "'");
    return static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw ConfigError("not a number: '" + s + "'");
  }
}

unsigned field_u(const Json& d, const char* key) {
  if (!d.contains(key)) throw ConfigError(std::string("descriptor needs \"") + key + "\"");
  if (!d[key].is_number_unsigned()) throw ConfigError(std::string("\"") + key + "\" must be a nonnegative integer");
  return d[key].get<unsigned>();
}

Universe descriptor_universe(const Json& d) {
  const std::string setting = d.value("setting", std::string("vs"));
  if (setting == "set") return Universe::sets(field_u(d, "n"), field_u(d, "k"));
  if (setting == "perm") return Universe::permutations(field_u(d, "n"));
  if (setting == "vs") return Universe::vectors(GaloisField::make(field_u(d, "q")), field_u(d, "n"), field_u(d, "k"));
  throw ConfigError("unknown setting '" + setting + "'");
}

Centre centre_from_json(const Universe& u, const Json& c) {
  switch (u.setting) {
    case Setting::Sets: {
      std::vector<unsigned> xs;
      for (const auto& x : c) xs.push_back(x.get<unsigned>());
      for (auto x : xs)
        if (x < 1 || x > u.n) throw DomainError("centre element " + std::to_string(x) + " outside [n]");
      return kset_from_elements(xs);
    }
    case Setting::Vectors:
      if (c.is_string()) return parse_centre(u, c.get<std::string>());
      {
        std::string joined;
        for (const auto& row : c) joined += (joined.empty() ? "" : ";") + row.get<std::string>();
        return parse_centre(u, joined);
      }
    case Setting::Permutations: {
      PermCentre pc;
      for (const auto& pair : c) {
        const unsigned i = pair.at(0).get<unsigned>(), v = pair.at(1).get<unsigned>();
        if (i < 1 || v < 1) throw DomainError("permutation centres are 1-based");
        pc.pairs.emplace_back(i - 1, v - 1);
      }
      return pc;
    }
  }
  throw ConfigError("bad centre");
}

UnionResult union_from_centres(const Universe& u, const std::vector<Centre>& centres,
                               std::optional<std::vector<std::vector<unsigned>>> pattern) {
  UnionSpec spec;
  for (const auto& c : centres) spec.stars.push_back(StarSpec{u, c});
  spec.pattern = std::move(pattern);
  return union_of_stars(spec);
}

Construction build(const Json& d) {
  if (!d.is_object()) throw ConfigError("descriptor must be a JSON object");
  Construction out;
  out.kind = d.value("kind", std::string());
  if (out.kind == "star" || out.kind == "union") {
    out.universe = descriptor_universe(d);
    if (out.kind == "star") {
      if (!d.contains("centre")) throw ConfigError("star descriptor needs \"centre\"");
      out.centres.push_back(centre_from_json(out.universe, d["centre"]));
    } else {
      if (!d.contains("centres") || !d["centres"].is_array()) throw ConfigError("union descriptor needs \"centres\"");
      for (const auto& c : d["centres"]) out.centres.push_back(centre_from_json(out.universe, c));
    }
    std::optional<std::vector<std::vector<unsigned>>> pattern;
    if (d.contains("pattern")) pattern = d["pattern"].get<std::vector<std::vector<unsigned>>>();
    out.result = union_from_centres(out.universe, out.centres, std::move(pattern));
    return out;
  }
  if (out.kind == "v1" || out.kind == "v2" || out.kind == "greedy" || out.kind == "orthogonal") {
    if (d.value("setting", std::string("vs")) != "vs") throw ConfigError(out.kind + " constructions live in the vs setting");
    const FieldPtr field = GaloisField::make(field_u(d, "q"));
    const unsigned n = field_u(d, "n"), k = field_u(d, "k"), t = field_u(d, "t"), s = field_u(d, "s");
    out.universe = Universe::vectors(field, n, k);
    std::vector<Subspace> centres;
    if (out.kind == "v1") {
      centres = independent_centres(field, t, s, n);
    } else {
      const CentreConfiguration cfg =
          out.kind == "orthogonal" ? orthogonal_sum_centres(field, t, s, n) : greedy_centres_in_W(field, t, s, n);
      centres = cfg.centres;
      out.W = cfg.W;
    }
    for (const auto& c : centres) out.centres.emplace_back(c);
    out.result = out.kind == "v1"   ? construct_v1(field, n, k, t, s)
                 : out.kind == "v2" ? construct_v2(field, n, k, t, s)
                                    : union_of_stars(union_spec_from_centres(out.universe, centres));
    return out;
  }
  throw ConfigError("descriptor \"kind\" must be star, union, v1, v2, greedy or orthogonal");
}

}  // namespace

Construction build_construction(const Json& descriptor) {
  try {
    return build(descriptor);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed descriptor: ") + e.what());
  }
}

Construction build_construction_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  Json d;
  try {
    d = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return build_construction(d);
}

Centre parse_centre(const Universe& u, const std::string& text) {
  switch (u.setting) {
    case Setting::Sets: {
      std::vector<unsigned> xs;
      for (const auto& part : split(text, ',')) xs.push_back(to_unsigned(part));
      for (auto x : xs)
        if (x < 1 || x > u.n) throw DomainError("centre element " + std::to_string(x) + " outside [n]");
      return kset_from_elements(xs);
    }
    case Setting::Vectors: {
      const auto rows = split(text, ';');
      const Universe shape = Universe::vectors(u.field, u.n, static_cast<unsigned>(rows.size()));
      try {
        return std::get<Subspace>(parse_element(shape, text));
      } catch (const ParseError& e) {
        throw DomainError(std::string("bad subspace centre: ") + e.what());
      }
    }
    case Setting::Permutations: {
      PermCentre pc;
      for (const auto& part : split(text, ',')) {
        const auto iv = split(part, ':');
        if (iv.size() != 2) throw ConfigError("permutation centre entries look like index:value");
        const unsigned i = to_unsigned(iv[0]), v = to_unsigned(iv[1]);
        if (i < 1 || v < 1) throw DomainError("permutation centres are 1-based");
        pc.pairs.emplace_back(i - 1, v - 1);
      }
      return pc;
    }
  }
  throw ConfigError("bad centre");
}

std::string format_centre(const Universe& u, const Centre& c) {
  if (const auto* s = std::get_if<KSet>(&c)) return format_element(Universe::sets(u.n, u.k), *s);
  if (const auto* v = std::get_if<Subspace>(&c)) return format_element(u, *v);
  std::string out;
  for (const auto& [i, v] : std::get<PermCentre>(c).pairs) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1) + ':' + std::to_string(v + 1);
  }
  return out;
}

std::vector<KSet> parse_set_centres(unsigned n, const std::string& text) {
  std::vector<KSet> out;
  const Universe u = Universe::sets(n, 1);
  for (const auto& part : split(text, ';')) out.push_back(std::get<KSet>(parse_centre(u, part)));
  return out;
}

}  // namespace erlab::cli
