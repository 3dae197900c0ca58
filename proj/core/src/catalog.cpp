#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "etalab/errors.hpp"
#include "etalab/io.hpp"
#include "etalab/zeros.hpp"

namespace etalab {

namespace {

using nlohmann::json;

std::string record_line(const ZeroRecord& r) {
  std::ostringstream os;
  os << "{\"sigma\":" << format_g17(r.sigma) << ",\"t\":" << format_g17(r.t)
     << ",\"residual\":" << format_g17(r.residual) << ",\"kind\":\"" << to_string(r.kind)
     << "\",\"method\":\"" << to_string(r.method) << "\",\"iterations\":" << r.iterations << "}";
  return os.str();
}

std::string meta_line(const CatalogMetadata& m) {
  std::ostringstream os;
  os << "{\"meta\":{\"t_min\":" << format_g17(m.t_min) << ",\"t_max\":" << format_g17(m.t_max)
     << ",\"scan_step\":" << format_g17(m.scan_step)
     << ",\"scan_threshold\":" << format_g17(m.scan_threshold) << ",\"timestamp\":"
     << json(m.timestamp).dump() << "}}";
  return os.str();
}

double require_number(const json& o, const char* key, long line) {
  if (!o.contains(key) || !o[key].is_number())
    throw ParseError(std::string("catalog: missing numeric field '") + key + "' on line " +
                         std::to_string(line),
                     line);
  return o[key].get<double>();
}

std::string require_string(const json& o, const char* key, long line) {
  if (!o.contains(key) || !o[key].is_string())
    throw ParseError(std::string("catalog: missing string field '") + key + "' on line " +
                         std::to_string(line),
                     line);
  return o[key].get<std::string>();
}

}  // namespace

void save_catalog(const ZeroCatalog& catalog, const std::filesystem::path& destination) {
  catalog.validate();
  std::ofstream out(destination);
  if (!out) throw std::runtime_error("save_catalog: cannot open " + destination.string());
  out << meta_line(catalog.metadata) << "\n";
  for (const auto& r : catalog.records) out << record_line(r) << "\n";
  if (!out) throw std::runtime_error("save_catalog: write failed for " + destination.string());
}

ZeroCatalog load_catalog(const std::filesystem::path& source) {
  std::ifstream in(source);
  if (!in) throw std::runtime_error("load_catalog: cannot open " + source.string());

  ZeroCatalog catalog;
  std::string line;
  long line_number = 0;
  bool have_meta = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded())
      throw ParseError("catalog: malformed JSON on line " + std::to_string(line_number),
                       line_number);
    if (obj.contains("meta")) {
      const json& m = obj["meta"];
      catalog.metadata.t_min = require_number(m, "t_min", line_number);
      catalog.metadata.t_max = require_number(m, "t_max", line_number);
      catalog.metadata.scan_step = require_number(m, "scan_step", line_number);
      catalog.metadata.scan_threshold = require_number(m, "scan_threshold", line_number);
      catalog.metadata.timestamp = require_string(m, "timestamp", line_number);
      have_meta = true;
      continue;
    }
    ZeroRecord r;
    r.sigma = require_number(obj, "sigma", line_number);
    r.t = require_number(obj, "t", line_number);
    r.residual = require_number(obj, "residual", line_number);
    try {
      r.kind = zero_kind_from_string(require_string(obj, "kind", line_number));
      r.method = refinement_method_from_string(require_string(obj, "method", line_number));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("catalog: ") + e.what() + " on line " +
                           std::to_string(line_number),
                       line_number);
    }
    if (!obj.contains("iterations") || !obj["iterations"].is_number_integer())
      throw ParseError("catalog: missing integer field 'iterations' on line " +
                           std::to_string(line_number),
                       line_number);
    r.iterations = obj["iterations"].get<int>();
    catalog.records.push_back(r);
  }
  if (!have_meta) throw ParseError("catalog: missing metadata line", 1);
  catalog.validate();
  return catalog;
}

}  // namespace etalab
