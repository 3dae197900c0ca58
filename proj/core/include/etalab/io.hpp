#pragma once

#include <filesystem>
#include <string>

#include "etalab/curve.hpp"
#include "etalab/regions.hpp"

namespace etalab {

/// Decimal rendering with 17 significant digits; round-trips doubles exactly.
std::string format_g17(double v);

/// CSV with header `param,x,y`, one row per sample, 17-significant-digit
/// decimals. Byte-identical for identical traces.
void write_trace_csv(const CurveTrace& trace, const std::filesystem::path& path);

/// Reads a trace CSV back. Family, fixed value and source are not stored in
/// the CSV and must be supplied. Throws ParseError with the line number on
/// malformed input.
CurveTrace read_trace_csv(const std::filesystem::path& path, CurveFamily family,
                          double fixed_value, SeriesSource source);

/// Writes <stem>.json with fields m, t_lo, t_hi and references to
/// <stem>_lower.csv / <stem>_upper.csv, plus the two boundary CSVs.
void write_region_json(const StepRegion& region, const std::filesystem::path& dir,
                       const std::string& stem);

}  // namespace etalab
