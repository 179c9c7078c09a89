#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace magnon {

enum class TableKind { Dispersion, EntanglementMap, Spectrum, Trace, Oracle };

std::string to_string(TableKind kind);

/// An empty cell marks a value that could not be computed (unstable point).
using Cell = std::variant<std::monostate, long long, double, bool>;

struct ResultTable {
  TableKind kind = TableKind::Dispersion;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::size_t flagged = 0; // rows with empty value fields

  void add_row(std::vector<Cell> row);
};

/// Fixed 'precision' significant digits; scientific outside [1e-6, 1e6).
std::string format_real(double x, int precision = 12);

void write_csv(std::ostream& out, const ResultTable& table, int precision = 12);
void write_json(std::ostream& out, const ResultTable& table, int precision = 12);
std::string to_csv(const ResultTable& table, int precision = 12);

} // namespace magnon
