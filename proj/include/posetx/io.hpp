#pragma once
// Text formats.
//
// Poset file: `points <k>` then one `rel <i> <j>` line per generator pair
// (i strictly below j, closure applied); `#` starts a comment line.
// Serialization emits cover pairs only, sorted lexicographically.
//
// Catalog file: header `posetx-catalog v1 kmax=<K>` followed by one
// tab-separated row per class: n, k, min count, height, automorphisms,
// copies, downsets, exponential sum, canonical code in hex. Stable bytes.

#include <iosfwd>
#include <string>
#include <vector>

#include "posetx/catalog.hpp"
#include "posetx/poset.hpp"

namespace posetx {

Poset parse_poset(std::istream& in);
Poset parse_poset_string(const std::string& text);
std::string serialize_poset(const Poset& p);

struct CatalogFile {
  int k_max = 0;
  std::vector<CatalogEntry> entries;
};

std::string write_catalog(const CatalogFile& file);
CatalogFile read_catalog(std::istream& in);

std::string hex_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> hex_decode(const std::string& hex);

}  // namespace posetx
