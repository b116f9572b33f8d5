#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2uwe/config.hpp"
#include "l2uwe/metrics.hpp"
#include "l2uwe/pipeline.hpp"

namespace l2uwe {

struct ImageRecord {
  std::string input;
  std::string output;  // empty when the image failed
  std::string status;  // "ok" or "error"
  std::string error;
  std::optional<MetricsReport> metrics;  // output vs. input, when requested
  std::string started_at;                // ISO 8601 UTC
  double wall_ms = 0.0;
};

struct RunManifest {
  EnhanceConfig config;
  int jobs = 1;
  int max_in_flight = 0;  // high-water mark of concurrently processed images
  double total_wall_ms = 0.0;
  std::vector<ImageRecord> records;

  size_t ok_count() const;
};

/// JSON serialization of a config (every field, resolved values).
std::string config_to_json(const EnhanceConfig &config);

/// Applies fields from a JSON object on top of `base`. Unknown keys and
/// type mismatches throw ConfigError naming the key.
EnhanceConfig config_from_json(const std::string &json_text, EnhanceConfig base);
EnhanceConfig config_from_json_file(const std::string &path, EnhanceConfig base);

/// Enhances every input, writing "<stem>_l2uwe.png" (plus optional per-image
/// intermediate dumps and metrics) into output_dir, with `jobs` images in
/// flight at a time. Per-image failures are recorded and processing
/// continues. Writes output_dir/manifest.json and returns the manifest.
RunManifest run_enhance(const std::vector<std::string> &inputs,
                        const std::string &output_dir,
                        const EnhanceConfig &config, int jobs);

/// Dumps every pipeline intermediate for one image into `dir`.
void dump_artifacts(const ImageF &input, const PipelineArtifacts &art,
                    const std::string &dir);

struct ComparePair {
  std::string name;  // matching key (stem without the _l2uwe suffix)
  std::string original;
  std::string enhanced;
  MetricsReport report;
};

struct CompareResult {
  std::vector<ComparePair> pairs;
  std::vector<std::string> unmatched;  // files present on one side only
};

/// Pairs images across two directories by filename stem; the enhanced side
/// may carry a "_l2uwe" suffix. Unmatched files are recorded and skipped.
CompareResult run_compare(const std::string &original_dir,
                          const std::string &enhanced_dir);

/// Aggregate mean/std table, header "metric,mean,std".
std::string compare_csv(const CompareResult &result);

/// Per-pair reports plus the unmatched list, as JSON.
std::string compare_json(const CompareResult &result);

/// Writes metrics.csv and reports.json into `dir`.
void write_compare_outputs(const CompareResult &result, const std::string &dir);

void write_manifest(const RunManifest &manifest, const std::string &path);

/// Image files (png/jpg/jpeg) directly inside `dir`, sorted by name.
std::vector<std::string> list_image_files(const std::string &dir);

}  // namespace l2uwe
