// Command line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 numerical failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "starrad/extremal.hpp"
#include "starrad/oracle.hpp"
#include "starrad/report.hpp"
#include "starrad/solver.hpp"

namespace {

using namespace starrad;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

int run_radius(const std::string& cls_token, const std::string& target_token,
               bool alpha_given, double alpha, const std::string& format_token) {
  const std::optional<SeedClass> cls = parse_class(cls_token);
  if (!cls) {
    std::cerr << "unknown class '" << cls_token << "' (expected k1, k2, k3)\n";
    return kExitUsage;
  }
  const std::optional<OutputFormat> format = parse_format(format_token);
  if (!format) {
    std::cerr << "unknown format '" << format_token
              << "' (expected text, json, csv)\n";
    return kExitUsage;
  }

  const bool plain = target_token == "starlike";
  std::optional<RegionKind> kind;
  if (!plain) {
    kind = parse_region(target_token);
    if (!kind) {
      std::cerr << "unknown target '" << target_token << "'\n";
      return kExitUsage;
    }
  }

  const bool is_order = !plain && *kind == RegionKind::StarlikeOfOrder;
  if (is_order && !alpha_given) {
    std::cerr << "--target order requires --alpha\n";
    return kExitUsage;
  }
  if (!is_order && alpha_given) {
    std::cerr << "--alpha only applies to --target order\n";
    return kExitUsage;
  }
  if (is_order && !(alpha >= 0.0 && alpha < 1.0)) {
    std::cerr << "--alpha must lie in [0, 1)\n";
    return kExitUsage;
  }

  // Catalog rows carry the published metadata; anything else (order with a
  // nonzero alpha) is solved bare.
  const EquationCatalogEntry* match = nullptr;
  for (const auto& e : catalog()) {
    if (e.class_kind != *cls) continue;
    if (plain != e.plain_starlike) continue;
    if (!plain && e.region.kind != *kind) continue;
    if (is_order && e.region.alpha != alpha) continue;
    match = &e;
    break;
  }

  OutputRecord rec;
  if (match) {
    rec = record_for(*match);
  } else {
    const TargetRegion region = starlike_of_order(alpha);
    const RadiusResult solved = solve_radius(*cls, region);
    rec.class_name = std::string(class_token(*cls));
    rec.region_name = std::string(region_token(region.kind));
    rec.alpha = alpha;
    rec.radius = solved.value;
    if (solved.value > 0.0 && solved.value < 1.0) {
      const SharpnessReport rep = verify_sharpness(*cls, region, solved.value);
      if (rep.status == WitnessStatus::Asserted)
        rec.sharp = rep.distance_to_boundary <= 1e-6;
    }
  }
  std::cout << format_records({rec}, *format);
  return 0;
}

int run_table(const std::string& format_token) {
  const std::optional<OutputFormat> format = parse_format(format_token);
  if (!format) {
    std::cerr << "unknown format '" << format_token
              << "' (expected text, json, csv)\n";
    return kExitUsage;
  }
  std::cout << format_records(build_table(), *format);
  return 0;
}

int run_verify(bool with_oracle, double tol, int samples) {
  if (!(tol > 0.0)) {
    std::cerr << "--tol must be positive\n";
    return kExitUsage;
  }
  OracleConfig cfg;
  cfg.disk_samples = samples;
  try {
    validate(cfg);
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  int failures = 0;
  for (const auto& entry : catalog()) {
    const RadiusResult res = solve_radius(entry.class_kind, entry.region);
    bool ok = true;
    std::string detail;
    char buf[96];

    if (entry.paper_value) {
      const double diff = std::abs(res.value - *entry.paper_value);
      std::snprintf(buf, sizeof buf, "  |r-paper| %.2e", diff);
      detail += buf;
      if (diff > tol) ok = false;
    }
    if (entry.closed_form) {
      const double diff = std::abs(res.value - *entry.closed_form);
      std::snprintf(buf, sizeof buf, "  |r-closed| %.2e", diff);
      detail += buf;
      if (diff > std::max(tol, 1e-9)) ok = false;
    }

    const SharpnessReport rep =
        verify_sharpness(entry.class_kind, entry.region, res.value);
    switch (rep.status) {
      case WitnessStatus::Asserted:
        std::snprintf(buf, sizeof buf, "  witness on boundary (%.2e)",
                      rep.distance_to_boundary);
        detail += buf;
        if (rep.distance_to_boundary > 1e-6) ok = false;
        break;
      case WitnessStatus::ReportOnly:
        std::snprintf(buf, sizeof buf, "  witness informational (%.2e)",
                      rep.distance_to_boundary);
        detail += buf;
        break;
      case WitnessStatus::OffBoundary:
        std::snprintf(buf, sizeof buf, "  witness misses by %.2e (known)",
                      rep.distance_to_boundary);
        detail += buf;
        break;
    }

    if (with_oracle) {
      const double recovered = oracle_radius(entry.class_kind, entry.region, cfg);
      const double diff = std::abs(recovered - res.value);
      std::snprintf(buf, sizeof buf, "  |r-oracle| %.2e", diff);
      detail += buf;
      if (diff > std::max(tol, 5e-4)) ok = false;
    }

    if (!ok) ++failures;
    std::printf("%-4s %-15s radius %.9f%s\n", ok ? "ok" : "FAIL",
                entry.id.c_str(), res.value, detail.c_str());
  }
  std::printf("%zu entries, %d failures\n", catalog().size(), failures);
  return failures == 0 ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radii of starlikeness for the seed classes K1, K2, K3"};
  app.require_subcommand(1);

  std::string rad_class, rad_target, rad_format = "text";
  double rad_alpha = 0.0;
  auto* rad = app.add_subcommand("radius", "solve one class/target radius");
  rad->add_option("--class", rad_class, "seed class: k1, k2 or k3")->required();
  rad->add_option("--target", rad_target,
                  "target region token, or 'starlike' for the plain radius")
      ->required();
  auto* alpha_opt =
      rad->add_option("--alpha", rad_alpha, "order of starlikeness, in [0,1)");
  rad->add_option("--format", rad_format, "text, json or csv");

  std::string table_format = "text";
  auto* tab = app.add_subcommand("table", "print all catalog radii");
  tab->add_option("--format", table_format, "text, json or csv");

  bool with_oracle = false;
  double tol = 1e-5;
  int samples = 2048;
  auto* ver = app.add_subcommand(
      "verify", "re-solve every catalog radius and check it");
  ver->add_flag("--oracle", with_oracle,
                "also recover each radius with the sampling oracle");
  ver->add_option("--tol", tol, "comparison tolerance (default 1e-5)");
  auto* samples_opt = ver->add_option(
      "--samples", samples, "oracle disk samples (default 2048)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!*samples_opt) {
    if (const char* env = std::getenv("RADII_SEED_SAMPLES")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v <= 0) {
        std::cerr << "RADII_SEED_SAMPLES must be a positive integer\n";
        return kExitUsage;
      }
      samples = static_cast<int>(v);
    }
  }

  try {
    if (rad->parsed())
      return run_radius(rad_class, rad_target, alpha_opt->count() > 0,
                        rad_alpha, rad_format);
    if (tab->parsed()) return run_table(table_format);
    return run_verify(with_oracle, tol, samples);
  } catch (const NoRootError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const BracketError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
