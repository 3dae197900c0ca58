#include "etalab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "etalab/errors.hpp"

namespace etalab {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace_csv(const CurveTrace& trace, const std::filesystem::path& path) {
  trace.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_trace_csv: cannot open " + path.string());
  out << "param,x,y\n";
  for (const auto& s : trace.samples)
    out << format_g17(s.param) << ',' << format_g17(s.x) << ',' << format_g17(s.y) << "\n";
  if (!out) throw std::runtime_error("write_trace_csv: write failed for " + path.string());
}

CurveTrace read_trace_csv(const std::filesystem::path& path, CurveFamily family,
                          double fixed_value, SeriesSource source) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_trace_csv: cannot open " + path.string());

  CurveTrace trace{family, fixed_value, source, {}};
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1) {
      if (line != "param,x,y")
        throw ParseError("trace CSV: expected header 'param,x,y'", line_number);
      continue;
    }
    if (line.empty()) continue;
    TraceSample s;
    char extra;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf%c", &s.param, &s.x, &s.y, &extra) != 3)
      throw ParseError("trace CSV: malformed row on line " + std::to_string(line_number),
                       line_number);
    trace.samples.push_back(s);
  }
  trace.validate();
  return trace;
}

void write_region_json(const StepRegion& region, const std::filesystem::path& dir,
                       const std::string& stem) {
  const std::string lower_name = stem + "_lower.csv";
  const std::string upper_name = stem + "_upper.csv";
  write_trace_csv(region.lower_boundary, dir / lower_name);
  write_trace_csv(region.upper_boundary, dir / upper_name);

  std::ofstream out(dir / (stem + ".json"));
  if (!out) throw std::runtime_error("write_region_json: cannot open output in " + dir.string());
  out << "{\"m\":" << region.index_m << ",\"t_lo\":" << format_g17(region.t_lo)
      << ",\"t_hi\":" << format_g17(region.t_hi) << ",\"lower_boundary_csv\":"
      << nlohmann::json(lower_name).dump() << ",\"upper_boundary_csv\":"
      << nlohmann::json(upper_name).dump() << "}\n";
}

}  // namespace etalab
