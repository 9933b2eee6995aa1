#include "hbasis/basis_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>

#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Document::Section& Document::Section::set(const std::string& key, std::string value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  entries.emplace_back(key, std::move(value));
  return *this;
}

Document::Section& Document::Section::set(const std::string& key, std::uint64_t value) {
  return set(key, std::to_string(value));
}

Document::Section& Document::Section::set(const std::string& key, bool value) {
  return set(key, std::string(value ? "true" : "false"));
}

const std::string* Document::Section::find(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

Document::Section& Document::section(const std::string& name) {
  for (auto& s : sections_) {
    if (s.name == name) return s;
  }
  sections_.push_back(Section{name, {}});
  return sections_.back();
}

const Document::Section* Document::find(const std::string& name) const {
  for (const auto& s : sections_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void Document::write(std::ostream& os) const {
  bool first = true;
  for (const auto& s : sections_) {
    if (!first) os << '\n';
    first = false;
    os << '[' << s.name << "]\n";
    for (const auto& [k, v] : s.entries) os << k << " = " << v << '\n';
  }
}

std::string Document::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

Document Document::parse(std::istream& is) {
  Document doc;
  Section* current = nullptr;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']' || t.size() < 3) {
        throw InvalidInput("line " + std::to_string(lineno) + ": malformed section header");
      }
      current = &doc.section(trim(t.substr(1, t.size() - 2)));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    if (current == nullptr) current = &doc.section("basis");
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw InvalidInput("line " + std::to_string(lineno) + ": empty key");
    current->set(key, trim(t.substr(eq + 1)));
  }
  return doc;
}

Document Document::parse_string(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

std::uint64_t parse_integer(const std::string& text) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  const auto* end = t.data() + t.size();
  const auto res = std::from_chars(t.data(), end, v);
  if (t.empty() || res.ec != std::errc() || res.ptr != end) {
    throw InvalidInput("not a non-negative integer: '" + t + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_integer_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string token;
  std::istringstream is(text);
  while (is >> token) {
    // tolerate "0, 1, 3" as well as "0 1 3"
    std::string cleaned;
    for (char c : token) {
      if (c != ',') cleaned.push_back(c);
    }
    if (!cleaned.empty()) out.push_back(parse_integer(cleaned));
  }
  return out;
}

std::string join_integers(const std::vector<std::uint64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out.push_back(sep);
    out += std::to_string(values[i]);
  }
  return out;
}

BasisFile read_basis(const Document& doc) {
  const auto* sec = doc.find("basis");
  if (sec == nullptr) throw InvalidInput("missing [basis] section");
  BasisFile file;
  if (const auto* h = sec->find("h")) file.h = static_cast<unsigned>(parse_integer(*h));
  if (const auto* n = sec->find("n")) file.n = parse_integer(*n);
  const auto* elems = sec->find("elements");
  if (elems == nullptr) throw InvalidInput("[basis] has no elements field");
  file.elements = parse_integer_list(*elems);
  if (file.elements.empty()) throw InvalidInput("[basis] elements must not be empty");
  for (std::size_t i = 1; i < file.elements.size(); ++i) {
    if (file.elements[i] <= file.elements[i - 1]) {
      throw InvalidInput("[basis] elements must be strictly ascending");
    }
  }
  if (const auto* prov = doc.find("provenance")) {
    for (const auto& [k, v] : prov->entries) file.provenance[k] = v;
  }
  return file;
}

BasisFile read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_basis(Document::parse(in));
}

void write_basis(Document& doc, const BasisFile& file) {
  auto& sec = doc.section("basis");
  if (file.h) sec.set("h", std::uint64_t{*file.h});
  if (file.n) sec.set("n", *file.n);
  sec.set("size", std::uint64_t{file.elements.size()});
  sec.set("elements", join_integers(file.elements));
  if (!file.provenance.empty()) {
    auto& prov = doc.section("provenance");
    for (const auto& [k, v] : file.provenance) prov.set(k, v);
  }
}

std::string format_real(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << v;
  return os.str();
}

std::string format_fixed(double v, int decimals) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

}  // namespace hbasis
