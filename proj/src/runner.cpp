#include "l2uwe/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include <json.hpp>

#include "l2uwe/io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace l2uwe {
namespace {

std::string iso_utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

json config_json(const EnhanceConfig &c) {
  json j;
  j["m_detail"] = c.m_detail;
  j["m_bright"] = c.m_bright;
  j["tolerance"] = c.tolerance;
  j["omega"] = c.omega;
  j["t0"] = c.t0;
  j["levels"] = c.levels;
  j["lighting_mode"] = to_string(c.lighting_mode);
  j["atmosphere_fraction"] = c.atmosphere_fraction;
  j["guided_radius"] = c.guided_radius;
  j["guided_eps"] = c.guided_eps;
  j["guided_subsample"] = c.guided_subsample;
  j["dump_intermediates"] = c.dump_intermediates;
  j["metrics"] = c.metrics;
  return j;
}

template <typename T>
T field_as(const json &j, const std::string &key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception &) {
    throw ConfigError(key, "wrong type in config file");
  }
}

json metrics_json(const MetricsReport &m) {
  json j;
  j["gcf"] = m.gcf;
  if (m.e_score)
    j["e_score"] = *m.e_score;
  else
    j["e_score"] = nullptr;
  j["r_score"] = m.r_score;
  j["mean_luminance_in"] = m.mean_luminance_in;
  j["mean_luminance_out"] = m.mean_luminance_out;
  return j;
}

ImageF cci_to_image(const ContrastCodeImage &cci) {
  ImageF img(cci.width, cci.height, 1);
  for (size_t i = 0; i < cci.codes.size(); ++i)
    img.data[i] =
        static_cast<float>(std::round(255.0 * cci.codes[i] / 7.0) / 255.0);
  return img;
}

void dump_stage(const EnhanceStage &stage, const std::string &tag,
                const fs::path &dir) {
  save_png(clamp01(stage.t_raw), (dir / ("t_raw_" + tag + ".png")).string());
  save_pfm(stage.t_raw, (dir / ("t_raw_" + tag + ".pfm")).string());
  save_png(clamp01(stage.t_refined), (dir / ("t_" + tag + ".png")).string());
  save_pfm(stage.t_refined, (dir / ("t_" + tag + ".pfm")).string());
  save_png(stage.output, (dir / ("input_" + tag + ".png")).string());
}

void dump_weights(const WeightMaps &w, const std::string &tag,
                  const fs::path &dir) {
  save_png(clamp01(w.saliency), (dir / ("weight_saliency_" + tag + ".png")).string());
  save_png(clamp01(w.luminance), (dir / ("weight_luminance_" + tag + ".png")).string());
  save_png(clamp01(w.local_contrast),
           (dir / ("weight_contrast_" + tag + ".png")).string());
}

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string strip_l2uwe_suffix(std::string stem) {
  const std::string suffix = "_l2uwe";
  if (stem.size() > suffix.size() &&
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0)
    stem.erase(stem.size() - suffix.size());
  return stem;
}

}  // namespace

size_t RunManifest::ok_count() const {
  size_t n = 0;
  for (const auto &r : records)
    if (r.status == "ok") ++n;
  return n;
}

std::string config_to_json(const EnhanceConfig &config) {
  return config_json(config).dump(2);
}

EnhanceConfig config_from_json(const std::string &json_text, EnhanceConfig base) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");

  for (const auto &[key, value] : j.items()) {
    (void)value;
    if (key == "m_detail")
      base.m_detail = field_as<int>(j, key);
    else if (key == "m_bright")
      base.m_bright = field_as<int>(j, key);
    else if (key == "tolerance")
      base.tolerance = field_as<double>(j, key);
    else if (key == "omega")
      base.omega = field_as<double>(j, key);
    else if (key == "t0")
      base.t0 = field_as<double>(j, key);
    else if (key == "levels")
      base.levels = field_as<int>(j, key);
    else if (key == "lighting_mode")
      base.lighting_mode =
          lighting_mode_from_string(field_as<std::string>(j, key));
    else if (key == "atmosphere_fraction")
      base.atmosphere_fraction = field_as<double>(j, key);
    else if (key == "guided_radius")
      base.guided_radius = field_as<int>(j, key);
    else if (key == "guided_eps")
      base.guided_eps = field_as<double>(j, key);
    else if (key == "guided_subsample")
      base.guided_subsample = field_as<int>(j, key);
    else if (key == "dump_intermediates")
      base.dump_intermediates = field_as<bool>(j, key);
    else if (key == "metrics")
      base.metrics = field_as<bool>(j, key);
    else
      throw ConfigError(key, "unknown config field");
  }
  return base;
}

EnhanceConfig config_from_json_file(const std::string &path, EnhanceConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return config_from_json(text, std::move(base));
}

void dump_artifacts(const ImageF &input, const PipelineArtifacts &art,
                    const std::string &dir) {
  fs::path d(dir);
  fs::create_directories(d);
  save_png(input, (d / "input.png").string());
  save_png(cci_to_image(art.cci), (d / "cci.png").string());
  save_png(clamp01(art.light_detail.image), (d / "light_detail.png").string());
  save_pfm(art.light_detail.image, (d / "light_detail.pfm").string());
  save_png(clamp01(art.light_bright.image), (d / "light_bright.png").string());
  save_pfm(art.light_bright.image, (d / "light_bright.pfm").string());
  dump_stage(art.stage_detail, "detail", d);
  dump_stage(art.stage_bright, "bright", d);
  dump_weights(art.weights_detail, "detail", d);
  dump_weights(art.weights_bright, "bright", d);
  save_png(clamp01(art.norm_weight_detail), (d / "weight_norm_detail.png").string());
  save_png(clamp01(art.norm_weight_bright), (d / "weight_norm_bright.png").string());
  save_pfm(art.fused_preclamp, (d / "fused_preclamp.pfm").string());
  save_png(art.output, (d / "output.png").string());
}

RunManifest run_enhance(const std::vector<std::string> &inputs,
                        const std::string &output_dir,
                        const EnhanceConfig &config, int jobs) {
  config.validate();
  if (jobs < 1) jobs = 1;

  fs::create_directories(output_dir);

  RunManifest manifest;
  manifest.config = config;
  manifest.jobs = jobs;
  manifest.records.resize(inputs.size());

  // Output names are assigned up front so collisions between equal stems
  // resolve deterministically regardless of scheduling.
  std::vector<std::string> out_paths(inputs.size());
  std::vector<std::string> dump_dirs(inputs.size());
  std::map<std::string, int> used;
  for (size_t i = 0; i < inputs.size(); ++i) {
    std::string stem = fs::path(inputs[i]).stem().string();
    int n = used[stem]++;
    if (n > 0) stem += "_" + std::to_string(n + 1);
    out_paths[i] = (fs::path(output_dir) / (stem + "_l2uwe.png")).string();
    dump_dirs[i] = (fs::path(output_dir) / stem).string();
  }

  auto run_start = std::chrono::steady_clock::now();
  std::atomic<size_t> next{0};
  std::atomic<int> in_flight{0};
  std::atomic<int> high_water{0};

  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      int cur = in_flight.fetch_add(1) + 1;
      int seen = high_water.load();
      while (cur > seen && !high_water.compare_exchange_weak(seen, cur)) {
      }

      ImageRecord &rec = manifest.records[i];
      rec.input = inputs[i];
      rec.started_at = iso_utc_now();
      auto start = std::chrono::steady_clock::now();
      try {
        ImageF img = load_image(inputs[i]);
        ImageF out;
        if (config.dump_intermediates) {
          PipelineArtifacts art = enhance_with_artifacts(img, config);
          dump_artifacts(img, art, dump_dirs[i]);
          out = std::move(art.output);
        } else {
          out = enhance(img, config);
        }
        save_png(out, out_paths[i]);
        if (config.metrics) rec.metrics = compute_metrics(img, out);
        rec.output = out_paths[i];
        rec.status = "ok";
      } catch (const std::exception &e) {
        rec.status = "error";
        rec.error = e.what();
      }
      rec.wall_ms = elapsed_ms(start);
      in_flight.fetch_sub(1);
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int n_threads = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(jobs), std::max<size_t>(inputs.size(), 1)));
    pool.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
  }

  manifest.max_in_flight = high_water.load();
  manifest.total_wall_ms = elapsed_ms(run_start);
  write_manifest(manifest, (fs::path(output_dir) / "manifest.json").string());
  return manifest;
}

void write_manifest(const RunManifest &manifest, const std::string &path) {
  json j;
  j["jobs"] = manifest.jobs;
  j["config"] = config_json(manifest.config);
  json images = json::array();
  for (const auto &rec : manifest.records) {
    json r;
    r["input"] = rec.input;
    r["output"] = rec.output;
    r["status"] = rec.status;
    r["error"] = rec.error;
    r["metrics"] = rec.metrics ? metrics_json(*rec.metrics) : json(nullptr);
    r["timing"] = {{"started_at", rec.started_at}, {"wall_ms", rec.wall_ms}};
    images.push_back(std::move(r));
  }
  j["images"] = std::move(images);
  j["timing"] = {{"total_wall_ms", manifest.total_wall_ms},
                 {"max_in_flight", manifest.max_in_flight}};

  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_manifest: cannot open " + path);
  out << j.dump(2) << "\n";
}

std::vector<std::string> list_image_files(const std::string &dir) {
  std::vector<std::string> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext == ".png" || ext == ".jpg" || ext == ".jpeg")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

CompareResult run_compare(const std::string &original_dir,
                          const std::string &enhanced_dir) {
  CompareResult result;

  auto index_dir = [&result](const std::string &dir) {
    std::map<std::string, std::string> by_key;
    for (const std::string &f : list_image_files(dir)) {
      std::string key = strip_l2uwe_suffix(fs::path(f).stem().string());
      if (!by_key.emplace(key, f).second) result.unmatched.push_back(f);
    }
    return by_key;
  };

  std::map<std::string, std::string> originals = index_dir(original_dir);
  std::map<std::string, std::string> enhanced = index_dir(enhanced_dir);

  for (const auto &[key, orig_path] : originals) {
    auto it = enhanced.find(key);
    if (it == enhanced.end()) {
      result.unmatched.push_back(orig_path);
      continue;
    }
    ComparePair pair;
    pair.name = key;
    pair.original = orig_path;
    pair.enhanced = it->second;
    pair.report = compute_metrics(load_image(orig_path), load_image(it->second));
    result.pairs.push_back(std::move(pair));
  }
  for (const auto &[key, enh_path] : enhanced)
    if (originals.find(key) == originals.end())
      result.unmatched.push_back(enh_path);

  return result;
}

std::string compare_csv(const CompareResult &result) {
  struct Column {
    const char *name;
    std::vector<double> values;
  };
  Column cols[] = {{"gcf", {}},
                   {"e_score", {}},
                   {"r_score", {}},
                   {"mean_luminance_in", {}},
                   {"mean_luminance_out", {}}};
  for (const auto &pair : result.pairs) {
    cols[0].values.push_back(pair.report.gcf);
    if (pair.report.e_score) cols[1].values.push_back(*pair.report.e_score);
    cols[2].values.push_back(pair.report.r_score);
    cols[3].values.push_back(pair.report.mean_luminance_in);
    cols[4].values.push_back(pair.report.mean_luminance_out);
  }

  std::string csv = "metric,mean,std\n";
  for (const Column &col : cols) {
    if (col.values.empty()) continue;
    double mean = 0.0;
    for (double v : col.values) mean += v;
    mean /= static_cast<double>(col.values.size());
    double var = 0.0;
    for (double v : col.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(col.values.size());
    csv += std::string(col.name) + "," + fmt_num(mean) + "," +
           fmt_num(std::sqrt(var)) + "\n";
  }
  return csv;
}

std::string compare_json(const CompareResult &result) {
  json j;
  json pairs = json::array();
  for (const auto &pair : result.pairs) {
    json p;
    p["name"] = pair.name;
    p["original"] = pair.original;
    p["enhanced"] = pair.enhanced;
    p["metrics"] = metrics_json(pair.report);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  j["unmatched"] = result.unmatched;
  return j.dump(2) + "\n";
}

void write_compare_outputs(const CompareResult &result, const std::string &dir) {
  fs::create_directories(dir);
  std::ofstream csv((fs::path(dir) / "metrics.csv").string());
  if (!csv) throw std::runtime_error("write_compare_outputs: cannot write CSV");
  csv << compare_csv(result);
  std::ofstream rep((fs::path(dir) / "reports.json").string());
  if (!rep) throw std::runtime_error("write_compare_outputs: cannot write JSON");
  rep << compare_json(result);
}

}  // namespace l2uwe
