#ifndef TRACKZERO_VERIFY_CATALOG_HPP
#define TRACKZERO_VERIFY_CATALOG_HPP

#include "trackzero/vfield/vfield.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tz {

// One record of the instance catalog.
//
//   [entry]
//   name = z_squared
//   domain = plane
//   suites = main, stability
//   x = (x^2 - y^2, 2*x*y)
//   tracker = (x, y)          (repeatable)
//   region = -1, -1, 1, 1
//   expect_blocks = 1
//   expect_indices = 2
//   source = how the expectations were obtained
//   notes = free text
//
// Blank lines and lines starting with '#' are ignored.
struct CatalogEntry {
  std::string name;
  Domain domain = Domain::Plane;
  std::set<std::string> suites;
  VectorField x;
  std::vector<VectorField> trackers;
  Box region;
  std::optional<std::size_t> expect_blocks;
  std::vector<int> expect_indices;  // sorted
  std::string source;
  std::string notes;

  bool in_suite(const std::string& s) const { return suites.count(s) != 0; }
};

std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

// "x0,y0,x1,y1"
Box parse_region(std::string_view text);

}  // namespace tz

#endif
