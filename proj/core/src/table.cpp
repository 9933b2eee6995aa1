#include "hbasis/table.hpp"

#include "hbasis/basis_io.hpp"
#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

std::string optional_int(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string csv_row(const SearchRow& r) {
  return std::to_string(r.h) + ',' + std::to_string(r.k) + ',' + std::to_string(r.value) + ',' +
         format_fixed(r.rohrbach_lower) + ',' + std::to_string(r.rohrbach_upper) + ',' +
         std::to_string(r.nodes) + ',' + (r.optimal ? "true" : "false") + ',' +
         join_integers(r.witness);
}

std::string csv_row(const BoundRow& r) {
  return std::to_string(r.h) + ',' + optional_int(r.k) + ',' + optional_int(r.n) + ',' + r.bound +
         ',' + r.direction + ',' + format_fixed(r.value) + ',' + r.exact + ',' + r.dropped_terms;
}

}  // namespace

std::string table_header(TableKind kind) {
  if (kind == TableKind::kSearch) {
    return "h,k,value,rohrbach_lower,rohrbach_upper,nodes,optimal,witness";
  }
  return "h,k,n,bound,direction,value,exact,dropped_terms";
}

std::string emit_table(TableKind kind, std::span<const TableRow> rows) {
  const std::size_t want = kind == TableKind::kSearch ? 0 : 1;
  for (const auto& row : rows) {
    if (row.index() != want) throw InvalidInput("emit_table: rows must all be of one kind");
  }
  std::string out = table_header(kind) + '\n';
  for (const auto& row : rows) {
    out += std::visit([](const auto& r) { return csv_row(r); }, row);
    out += '\n';
  }
  return out;
}

}  // namespace hbasis
