#include "magnon/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace magnon {

std::string to_string(TableKind kind) {
  switch (kind) {
  case TableKind::Dispersion: return "dispersion";
  case TableKind::EntanglementMap: return "entanglement_map";
  case TableKind::Spectrum: return "spectrum";
  case TableKind::Trace: return "trace";
  case TableKind::Oracle: return "oracle";
  }
  return "unknown";
}

void ResultTable::add_row(std::vector<Cell> row) {
  for (const auto& c : row)
    if (std::holds_alternative<std::monostate>(c)) {
      ++flagged;
      break;
    }
  rows.push_back(std::move(row));
}

std::string format_real(double x, int precision) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const double ax = std::abs(x);
  if (ax >= 1e-6 && ax < 1e6) {
    const int exponent = static_cast<int>(std::floor(std::log10(ax)));
    const int decimals = std::max(0, precision - 1 - exponent);
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  } else {
    std::snprintf(buf, sizeof buf, "%.*e", precision - 1, x);
  }
  return buf;
}

namespace {

std::string cell_text(const Cell& c, int precision) {
  struct Visitor {
    int precision;
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v, precision); }
    std::string operator()(bool v) const { return v ? "1" : "0"; }
  };
  return std::visit(Visitor{precision}, c);
}

} // namespace

void write_csv(std::ostream& out, const ResultTable& table, int precision) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i], precision);
    out << '\n';
  }
}

std::string to_csv(const ResultTable& table, int precision) {
  std::ostringstream os;
  write_csv(os, table, precision);
  return os.str();
}

void write_json(std::ostream& out, const ResultTable& table, int precision) {
  nlohmann::json doc;
  doc["kind"] = to_string(table.kind);
  doc["columns"] = table.columns;
  doc["flagged"] = table.flagged;
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    auto jr = nlohmann::json::array();
    for (const auto& c : row) {
      if (std::holds_alternative<std::monostate>(c)) jr.push_back(nullptr);
      else if (auto* i = std::get_if<long long>(&c)) jr.push_back(*i);
      else if (auto* b = std::get_if<bool>(&c)) jr.push_back(*b);
      else {
        const double v = std::get<double>(c);
        // Rounded through the CSV formatter so both outputs carry the same value.
        jr.push_back(std::isfinite(v) ? nlohmann::json(std::stod(format_real(v, precision)))
                                      : nlohmann::json(nullptr));
      }
    }
    rows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

} // namespace magnon
