#include "erlab/family_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "erlab/errors.hpp"

namespace erlab {
namespace {

std::string strip(const std::string& s) {
  std::string out = s.substr(0, s.find('#'));
  const auto b = out.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = out.find_last_not_of(" \t\r");
  return out.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(strip(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

unsigned parse_uint(const std::string& s, std::size_t line, const char* what) {
  unsigned v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

int digit36(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

char char36(unsigned v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

}  // namespace

Universe parse_header(const std::string& raw, std::size_t line) {
  std::istringstream is(strip(raw));
  std::string kind;
  is >> kind;
  std::map<std::string, unsigned> kv;
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    if (kv.count(key)) throw ParseError(line, "repeated header key '" + key + "'");
    kv[key] = parse_uint(tok.substr(eq + 1), line, key.c_str());
  }
  auto need = [&](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(line, "header is missing " + key + "=");
    return it->second;
  };
  auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [key, value] : kv) {
      bool ok = false;
      for (const char* k : keys) ok = ok || key == k;
      if (!ok) throw ParseError(line, "unexpected header key '" + key + "'");
    }
  };
  try {
    if (kind == "set") {
      only({"n", "k"});
      return Universe::sets(need("n"), need("k"));
    }
    if (kind == "vs") {
      only({"q", "n", "k"});
      const unsigned q = need("q");
      if (q > 36) throw ParseError(line, "family files support q <= 36");
      return Universe::vectors(GaloisField::make(q), need("n"), need("k"));
    }
    if (kind == "perm") {
      only({"n"});
      return Universe::permutations(need("n"));
    }
  } catch (const DomainError& e) {
    throw ParseError(line, e.what());
  }
  throw ParseError(line, "header must start with set, vs or perm");
}

GroundElement parse_element(const Universe& u, const std::string& raw, std::size_t line) {
  const std::string text = strip(raw);
  try {
    switch (u.setting) {
      case Setting::Sets: {
        std::vector<unsigned> elems;
        if (!text.empty()) {
          for (const auto& part : split(text, ',')) elems.push_back(parse_uint(part, line, "set element"));
        }
        for (std::size_t i = 1; i < elems.size(); ++i) {
          if (elems[i] <= elems[i - 1]) throw ParseError(line, "set elements must be strictly increasing");
        }
        for (auto e : elems) {
          if (e < 1 || e > u.n) throw ParseError(line, "set element " + std::to_string(e) + " outside [n]");
        }
        GroundElement g = kset_from_elements(elems);
        u.validate(g);
        return g;
      }
      case Setting::Vectors: {
        std::vector<std::vector<std::uint8_t>> rows;
        if (!text.empty()) {
          for (const auto& part : split(text, ';')) {
            if (part.size() != u.n) {
              throw ParseError(line, "basis row '" + part + "' must have " + std::to_string(u.n) + " entries");
            }
            std::vector<std::uint8_t> row;
            for (char c : part) {
              const int d = digit36(c);
              if (d < 0 || static_cast<unsigned>(d) >= u.field->order()) {
                throw ParseError(line, std::string("entry '") + c + "' is not an element of the field");
              }
              row.push_back(static_cast<std::uint8_t>(d));
            }
            rows.push_back(std::move(row));
          }
        }
        Subspace s = row_space(*u.field, u.n, rows);
        if (s.dim != u.k || rows.size() != u.k) {
          throw ParseError(line, "basis rows span dimension " + std::to_string(s.dim) + " with " +
                                     std::to_string(rows.size()) + " rows, expected " + std::to_string(u.k));
        }
        return s;
      }
      case Setting::Permutations: {
        Permutation p;
        if (!text.empty()) {
          for (const auto& part : split(text, ',')) {
            const unsigned v = parse_uint(part, line, "image");
            if (v < 1 || v > u.n) throw ParseError(line, "image " + std::to_string(v) + " outside [n]");
            p.image.push_back(static_cast<std::uint8_t>(v - 1));
          }
        }
        GroundElement g = p;
        u.validate(g);
        return g;
      }
    }
  } catch (const DomainError& e) {
    throw ParseError(line, e.what());
  }
  throw ParseError(line, "unknown setting");
}

Family read_family(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<Universe> universe;
  std::vector<GroundElement> members;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip(raw);
    if (text.empty()) continue;
    if (!universe) {
      universe = parse_header(text, line);
      continue;
    }
    members.push_back(parse_element(*universe, text, line));
  }
  if (!universe) throw ParseError(line == 0 ? 1 : line, "missing header line");
  return Family(*universe, std::move(members));
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open family file '" + path + "'");
  return read_family(in);
}

Family parse_family(const std::string& text) {
  std::istringstream in(text);
  return read_family(in);
}

std::string format_element(const Universe& u, const GroundElement& e) {
  std::string out;
  switch (u.setting) {
    case Setting::Sets:
      for (auto x : kset_elements(std::get<KSet>(e))) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
      }
      break;
    case Setting::Vectors: {
      const auto& s = std::get<Subspace>(e);
      for (unsigned r = 0; r < s.dim; ++r) {
        if (r) out += ';';
        for (unsigned c = 0; c < s.cols; ++c) out += char36(s.at(r, c));
      }
      break;
    }
    case Setting::Permutations:
      for (auto v : std::get<Permutation>(e).image) {
        if (!out.empty()) out += ',';
        out += std::to_string(v + 1);
      }
      break;
  }
  return out;
}

void write_family(std::ostream& out, const Family& f) {
  out << f.universe().describe() << '\n';
  for (const auto& m : f.members()) out << format_element(f.universe(), m) << '\n';
}

std::string format_family(const Family& f) {
  std::ostringstream os;
  write_family(os, f);
  return os.str();
}

}  // namespace erlab
