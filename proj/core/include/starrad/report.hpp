#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starrad/extremal.hpp"
#include "starrad/solver.hpp"

namespace starrad {

// One presentation row. Field names match the JSON schema exactly.
struct OutputRecord {
  std::string class_name;
  std::string region_name;
  std::optional<double> alpha;
  double radius = 0.0;
  std::optional<double> paper_value;
  std::optional<double> abs_diff;   // |radius - paper_value| when present
  std::optional<bool> sharp;        // absent when the witness is report-only
  bool suspect_flag = false;
};

enum class OutputFormat { Text, Json, Csv };
std::optional<OutputFormat> parse_format(std::string_view token);

// Solves the entry's radius and runs the sharpness witness, then flattens
// both into a presentation row.
OutputRecord record_for(const EquationCatalogEntry& entry);

// All 30 catalog entries in catalog order.
std::vector<OutputRecord> build_table();

// Text: fixed-width table, radii at 6 decimals. Json: {"schema":"v1",
// "records":[...]} with a fixed field order and shortest round-trip numbers,
// byte-identical across runs. Csv: header plus one line per record.
std::string format_records(const std::vector<OutputRecord>& records,
                           OutputFormat format);

}  // namespace starrad
