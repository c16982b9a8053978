#include "posetx/io.hpp"

#include <istream>
#include <sstream>

namespace posetx {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

long parse_long(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  long v;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line_no, "trailing junk in integer '" + tok + "'");
  return v;
}

}  // namespace

Poset parse_poset(std::istream& in) {
  std::string line;
  int line_no = 0;
  long k = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "points") {
      if (k >= 0) throw ParseError(line_no, "duplicate points line");
      std::string tok;
      if (!(ls >> tok)) throw ParseError(line_no, "points needs a count");
      k = parse_long(tok, line_no);
      if (k < 0 || k > kMaxPoints) throw ParseError(line_no, "point count out of range");
    } else if (head == "rel") {
      if (k < 0) throw ParseError(line_no, "rel before points");
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError(line_no, "rel needs two indices");
      long i = parse_long(a, line_no), j = parse_long(b, line_no);
      if (i < 0 || i >= k || j < 0 || j >= k)
        throw ParseError(line_no, "relation index out of range");
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    } else {
      throw ParseError(line_no, "unknown directive '" + head + "'");
    }
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "trailing junk '" + rest + "'");
  }
  if (k < 0) throw ParseError(line_no, "missing points line");
  return Poset::from_pairs(static_cast<int>(k), pairs);
}

Poset parse_poset_string(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::string serialize_poset(const Poset& p) {
  std::ostringstream os;
  os << "points " << p.size() << "\n";
  for (auto [i, j] : p.cover_pairs()) os << "rel " << i << " " << j << "\n";
  return os.str();
}

std::string hex_encode(const std::vector<std::uint8_t>& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> hex_decode(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw ParseError(1, "odd hex string length");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]), lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ParseError(1, "bad hex digit");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

std::string write_catalog(const CatalogFile& file) {
  std::ostringstream os;
  os << "posetx-catalog v1 kmax=" << file.k_max << "\n";
  for (const auto& e : file.entries) {
    os << e.index << '\t' << e.points << '\t' << e.min_count << '\t' << e.height << '\t'
       << e.automorphisms.str() << '\t' << e.copies.str() << '\t' << e.downsets.str() << '\t'
       << e.exp.str() << '\t' << hex_encode(e.code) << "\n";
  }
  return os.str();
}

CatalogFile read_catalog(std::istream& in) {
  CatalogFile file;
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError(line_no, "empty catalog file");
  const std::string prefix = "posetx-catalog v1 kmax=";
  if (line.rfind(prefix, 0) != 0) throw ParseError(line_no, "bad catalog header");
  file.k_max = static_cast<int>(parse_long(line.substr(prefix.size()), line_no));

  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 9) throw ParseError(line_no, "catalog row needs 9 fields");
    CatalogEntry e;
    e.index = static_cast<int>(parse_long(fields[0], line_no));
    e.points = static_cast<int>(parse_long(fields[1], line_no));
    e.min_count = static_cast<int>(parse_long(fields[2], line_no));
    e.height = static_cast<int>(parse_long(fields[3], line_no));
    try {
      e.automorphisms = Int(fields[4]);
      e.copies = Int(fields[5]);
      e.downsets = Int(fields[6]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad integer field");
    }
    e.exp = ExpSum::parse(fields[7]);
    e.code = hex_decode(fields[8]);
    e.poset = poset_from_code(e.code);
    if (e.poset.size() != e.points) throw ParseError(line_no, "code and point count disagree");
    file.entries.push_back(std::move(e));
  }
  return file;
}

}  // namespace posetx
