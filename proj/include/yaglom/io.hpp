#pragma once

// Text serialization of curves, region grids and build summaries. Numbers are
// written in the shortest form that parses back to the same double.

#include "yaglom/bounds.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace yaglom {

enum class OutputFormat { kCsv, kJsonLines };

OutputFormat parse_output_format(const std::string& name);

std::string format_number(double value);

/// Header `x,rho,rate,curve`; rho left blank below e^-700.
void write_curve(std::ostream& out, CurveKind kind, const std::vector<BoundPoint>& points, OutputFormat format);

struct RegionCell {
  double x = 0.0;
  double y = 0.0;
  double residual = 0.0;
  bool feasible() const { return residual <= 0.0; }
};

/// Residual on the grid x_min..x_max (x_steps points) by y_min..y_max (y_steps points), x outer.
std::vector<RegionCell> region_grid(double x_min, double x_max, int x_steps, double y_min, double y_max, int y_steps,
                                    double lambda);

/// Header `x,y,residual,feasible`.
void write_region(std::ostream& out, const std::vector<RegionCell>& cells, OutputFormat format);

/// Ordered key/value report; CSV writes `key,value` rows, JSON lines one object.
void write_summary(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& fields,
                   OutputFormat format);

/// Parses a CSV document with a header row into named columns of strings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t column(const std::string& name) const;
};
CsvTable parse_csv(const std::string& text);

}  // namespace yaglom
