#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hbasis {

struct SearchRow {
  unsigned h = 0;
  unsigned k = 0;
  std::uint64_t value = 0;
  double rohrbach_lower = 0.0;
  std::uint64_t rohrbach_upper = 0;
  std::uint64_t nodes = 0;
  bool optimal = false;
  std::vector<std::uint64_t> witness;
};

struct BoundRow {
  unsigned h = 0;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> n;
  std::string bound;
  std::string direction;
  double value = 0.0;
  std::string exact;  // empty when the bound is irrational
  std::string dropped_terms;
};

using TableRow = std::variant<SearchRow, BoundRow>;

enum class TableKind { kSearch, kBound };

std::string table_header(TableKind kind);

// Header plus one line per row. Every row must match `kind`; a mismatched
// (mixed) row set throws InvalidInput.
std::string emit_table(TableKind kind, std::span<const TableRow> rows);

}  // namespace hbasis
