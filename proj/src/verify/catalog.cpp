#include "trackzero/verify/catalog.hpp"

#include "trackzero/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tz {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

Box parse_region(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw Error("region needs four numbers x0,y0,x1,y1: '" + std::string(text) + "'");
  const Rational x0 = parse_rational(parts[0]), y0 = parse_rational(parts[1]);
  const Rational x1 = parse_rational(parts[2]), y1 = parse_rational(parts[3]);
  if (!(x0 < x1) || !(y0 < y1)) throw Error("region must satisfy x0 < x1 and y0 < y1: '" + std::string(text) + "'");
  return Box::from_corners(x0, y0, x1, y1);
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  struct Raw {
    std::size_t line = 0;
    std::vector<std::pair<std::string, std::string>> fields;
  };
  std::vector<Raw> raws;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (s == "[entry]") {
      raws.push_back({lineno, {}});
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw Error("catalog line " + std::to_string(lineno) + ": expected key = value");
    if (raws.empty()) throw Error("catalog line " + std::to_string(lineno) + ": field outside an [entry] record");
    raws.back().fields.emplace_back(std::string(trim(s.substr(0, eq))), std::string(trim(s.substr(eq + 1))));
  }

  std::vector<CatalogEntry> out;
  for (const Raw& raw : raws) {
    auto where = [&](const std::string& key) {
      return "catalog entry at line " + std::to_string(raw.line) + ", field '" + key + "'";
    };
    CatalogEntry e;
    for (const auto& [k, v] : raw.fields)
      if (k == "domain") e.domain = parse_domain(v);
    bool have_x = false, have_region = false;
    for (const auto& [k, v] : raw.fields) {
      try {
        if (k == "name") {
          e.name = v;
        } else if (k == "domain") {
        } else if (k == "suites") {
          for (auto s : split(v, ','))
            if (!s.empty()) e.suites.insert(std::string(s));
        } else if (k == "x") {
          e.x = parse_field(v, e.domain);
          have_x = true;
        } else if (k == "tracker") {
          e.trackers.push_back(parse_field(v, e.domain));
        } else if (k == "region") {
          e.region = parse_region(v);
          have_region = true;
        } else if (k == "expect_blocks") {
          e.expect_blocks = std::stoul(v);
        } else if (k == "expect_indices") {
          for (auto s : split(v, ','))
            if (!s.empty()) e.expect_indices.push_back(std::stoi(std::string(s)));
          std::sort(e.expect_indices.begin(), e.expect_indices.end());
        } else if (k == "source") {
          e.source = v;
        } else if (k == "notes") {
          e.notes = v;
        } else {
          throw Error("unknown key");
        }
      } catch (const std::exception& ex) {
        throw Error(where(k) + ": " + ex.what());
      }
    }
    if (e.name.empty()) throw Error(where("name") + ": missing");
    if (!have_x) throw Error(where("x") + ": missing");
    if (!have_region) {
      if (e.domain != Domain::Torus) throw Error(where("region") + ": missing");
      e.region = Box::from_corners(0, 0, 1, 1);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open catalog '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_catalog(ss.str());
}

}  // namespace tz
