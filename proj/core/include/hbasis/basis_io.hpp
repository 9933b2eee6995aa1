#pragma once

#include <cstdint>
#include <iosfwd>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbasis/sumset.hpp"

namespace hbasis {

// Line-oriented document shared by every subcommand:
//
//   # comment
//   [section]
//   key = value
//
// Sections and keys keep insertion order so output is byte-stable.
class Document {
 public:
  struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    Section& set(const std::string& key, std::string value);
    Section& set(const std::string& key, std::uint64_t value);
    Section& set(const std::string& key, bool value);
    const std::string* find(const std::string& key) const;
  };

  Section& section(const std::string& name);  // created on first use
  const Section* find(const std::string& name) const;
  const std::deque<Section>& sections() const { return sections_; }

  void write(std::ostream& os) const;
  std::string str() const;
  static Document parse(std::istream& is);
  static Document parse_string(const std::string& text);

 private:
  std::deque<Section> sections_;  // stable references across section()
};

// The [basis] section: h and n are optional so a bare element list is also a
// valid set file.
struct BasisFile {
  std::optional<unsigned> h;
  std::optional<std::uint64_t> n;
  std::vector<std::uint64_t> elements;  // strictly ascending
  std::map<std::string, std::string> provenance;
};

BasisFile read_basis(const Document& doc);
BasisFile read_basis_file(const std::string& path);
void write_basis(Document& doc, const BasisFile& file);

std::string join_integers(const std::vector<std::uint64_t>& values, char sep = ' ');
std::vector<std::uint64_t> parse_integer_list(const std::string& text);
std::uint64_t parse_integer(const std::string& text);

// Reals at 12 significant digits, locale independent.
std::string format_real(double v);
// Reals at a fixed number of decimals, for tables.
std::string format_fixed(double v, int decimals = 6);

}  // namespace hbasis
