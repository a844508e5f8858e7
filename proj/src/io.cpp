#include "yaglom/io.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <sstream>

namespace yaglom {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "jsonl" || name == "json-lines") return OutputFormat::kJsonLines;
  throw UsageError("unknown output format '" + name + "' (expected csv or jsonl)");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{}", value);
}

namespace {

nlohmann::ordered_json json_number(double value) {
  if (!std::isfinite(value)) return format_number(value);
  return value;
}

}  // namespace

void write_curve(std::ostream& out, CurveKind kind, const std::vector<BoundPoint>& points, OutputFormat format) {
  const std::string name(curve_name(kind));
  if (format == OutputFormat::kCsv) {
    out << "x,rho,rate,curve\n";
    for (const BoundPoint& pt : points) {
      const auto rho = pt.rho();
      out << format_number(pt.x) << ',' << (rho ? format_number(*rho) : std::string()) << ','
          << format_number(pt.rate) << ',' << name << '\n';
    }
    return;
  }
  for (const BoundPoint& pt : points) {
    const auto rho = pt.rho();
    nlohmann::ordered_json row;
    row["x"] = json_number(pt.x);
    row["rho"] = rho ? json_number(*rho) : nlohmann::ordered_json(nullptr);
    row["rate"] = json_number(pt.rate);
    row["curve"] = name;
    out << row.dump() << '\n';
  }
}

std::vector<RegionCell> region_grid(double x_min, double x_max, int x_steps, double y_min, double y_max, int y_steps,
                                    double lambda) {
  if (x_steps < 1 || y_steps < 1) throw UsageError("grid needs at least one step per axis");
  if (!(x_min <= x_max) || !(y_min <= y_max)) throw UsageError("grid range is empty");
  if (!(x_max < 1.0)) throw UsageError("region grid needs x < 1");
  if (!(y_min > 0.0)) throw UsageError("region grid needs y > 0");
  auto at = [](double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1);
  };
  std::vector<RegionCell> cells;
  cells.reserve(std::size_t(x_steps) * y_steps);
  for (int i = 0; i < x_steps; ++i) {
    const double x = at(x_min, x_max, x_steps, i);
    for (int j = 0; j < y_steps; ++j) {
      const double y = at(y_min, y_max, y_steps, j);
      cells.push_back({x, y, region_residual(x, y, lambda)});
    }
  }
  return cells;
}

void write_region(std::ostream& out, const std::vector<RegionCell>& cells, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    out << "x,y,residual,feasible\n";
    for (const RegionCell& c : cells) {
      out << format_number(c.x) << ',' << format_number(c.y) << ',' << format_number(c.residual) << ','
          << (c.feasible() ? 1 : 0) << '\n';
    }
    return;
  }
  for (const RegionCell& c : cells) {
    nlohmann::ordered_json row;
    row["x"] = json_number(c.x);
    row["y"] = json_number(c.y);
    row["residual"] = json_number(c.residual);
    row["feasible"] = c.feasible();
    out << row.dump() << '\n';
  }
}

void write_summary(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& fields,
                   OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    out << "key,value\n";
    for (const auto& [key, value] : fields) out << key << ',' << value << '\n';
    return;
  }
  nlohmann::ordered_json row;
  for (const auto& [key, value] : fields) row[key] = value;
  out << row.dump() << '\n';
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw UsageError("no column named '" + name + "'");
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream lines(text);
  std::string line;
  bool first = true;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream cells(line);
    while (std::getline(cells, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

}  // namespace yaglom
