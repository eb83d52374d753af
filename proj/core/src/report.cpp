#include "starrad/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace starrad {
namespace {

// Shortest round-trip decimal form, the same encoder the JSON output uses.
std::string num(double v) { return nlohmann::ordered_json(v).dump(); }

std::string format_text(const std::vector<OutputRecord>& records) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-5s %-12s %-7s %-9s %-9s %-10s %-5s %s\n",
                "class", "region", "alpha", "radius", "paper", "diff", "sharp",
                "suspect");
  out += line;
  for (const auto& r : records) {
    char alpha[24] = "-";
    char paper[24] = "-";
    char diff[24] = "-";
    char radius[24];
    if (r.alpha) std::snprintf(alpha, sizeof alpha, "%.4f", *r.alpha);
    if (r.paper_value)
      std::snprintf(paper, sizeof paper, "%.6f", *r.paper_value);
    if (r.abs_diff) std::snprintf(diff, sizeof diff, "%.2e", *r.abs_diff);
    std::snprintf(radius, sizeof radius, "%.6f", r.radius);
    const char* sharp = r.sharp ? (*r.sharp ? "yes" : "no") : "-";
    std::snprintf(line, sizeof line, "%-5s %-12s %-7s %-9s %-9s %-10s %-5s %s\n",
                  r.class_name.c_str(), r.region_name.c_str(), alpha, radius,
                  paper, diff, sharp, r.suspect_flag ? "yes" : "no");
    out += line;
  }
  return out;
}

std::string format_json(const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json root;
  root["schema"] = "v1";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["class"] = r.class_name;
    j["region"] = r.region_name;
    if (r.alpha) j["alpha"] = *r.alpha;
    j["radius"] = r.radius;
    if (r.paper_value) j["paper_value"] = *r.paper_value;
    if (r.abs_diff) j["abs_diff"] = *r.abs_diff;
    if (r.sharp) j["sharp"] = *r.sharp;
    j["suspect"] = r.suspect_flag;
    arr.push_back(std::move(j));
  }
  root["records"] = std::move(arr);
  return root.dump(2) + "\n";
}

std::string format_csv(const std::vector<OutputRecord>& records) {
  std::string out = "class,region,alpha,radius,paper_value,abs_diff,sharp,suspect\n";
  for (const auto& r : records) {
    out += r.class_name;
    out += ',';
    out += r.region_name;
    out += ',';
    if (r.alpha) out += num(*r.alpha);
    out += ',';
    out += num(r.radius);
    out += ',';
    if (r.paper_value) out += num(*r.paper_value);
    out += ',';
    if (r.abs_diff) out += num(*r.abs_diff);
    out += ',';
    if (r.sharp) out += *r.sharp ? "true" : "false";
    out += ',';
    out += r.suspect_flag ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view token) {
  if (token == "text") return OutputFormat::Text;
  if (token == "json") return OutputFormat::Json;
  if (token == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

OutputRecord record_for(const EquationCatalogEntry& entry) {
  const RadiusResult solved = solve_radius(entry.class_kind, entry.region);

  OutputRecord rec;
  rec.class_name = std::string(class_token(entry.class_kind));
  rec.region_name = entry.plain_starlike
                        ? std::string("starlike")
                        : std::string(region_token(entry.region.kind));
  if (!entry.plain_starlike &&
      entry.region.kind == RegionKind::StarlikeOfOrder)
    rec.alpha = entry.region.alpha;
  rec.radius = solved.value;
  rec.paper_value = entry.paper_value;
  if (entry.paper_value)
    rec.abs_diff = std::abs(solved.value - *entry.paper_value);

  const SharpnessReport rep =
      verify_sharpness(entry.class_kind, entry.region, solved.value);
  switch (rep.status) {
    case WitnessStatus::Asserted: rec.sharp = true; break;
    case WitnessStatus::OffBoundary: rec.sharp = false; break;
    case WitnessStatus::ReportOnly: break;
  }
  rec.suspect_flag = entry.printed_equation_suspect;
  return rec;
}

std::vector<OutputRecord> build_table() {
  std::vector<OutputRecord> records;
  records.reserve(catalog().size());
  for (const auto& entry : catalog()) records.push_back(record_for(entry));
  return records;
}

std::string format_records(const std::vector<OutputRecord>& records,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return format_text(records);
    case OutputFormat::Json: return format_json(records);
    case OutputFormat::Csv: return format_csv(records);
  }
  return {};
}

}  // namespace starrad
