#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "l2uwe/io.hpp"
#include "l2uwe/runner.hpp"

namespace fs = std::filesystem;
using namespace l2uwe;

namespace {

struct ConfigFlags {
  int m_detail = 5;
  int m_bright = 30;
  double tolerance = 0.005;
  double omega = 0.95;
  double t0 = 0.1;
  int levels = 5;
  std::string lighting_mode = "local_cg";
  double fraction = 0.002;
  int guided_radius = 16;
  double guided_eps = 1e-3;
  int guided_subsample = 4;
  bool dump = false;
  bool metrics = false;
  std::string config_path;
};

void add_config_flags(CLI::App *cmd, ConfigFlags &f) {
  cmd->add_option("--m-detail", f.m_detail,
                  "Multiplication factor of the detail-preserving lighting model");
  cmd->add_option("--m-bright", f.m_bright,
                  "Multiplication factor of the bright lighting model");
  cmd->add_option("--tolerance", f.tolerance,
                  "Contrast code tolerance discount per code step");
  cmd->add_option("--omega", f.omega, "Haze retention factor");
  cmd->add_option("--t0", f.t0, "Transmission lower bound");
  cmd->add_option("--levels", f.levels, "Fusion pyramid levels");
  cmd->add_option("--lighting-mode", f.lighting_mode,
                  "Lighting model: local_cg or global");
  cmd->add_option("--fraction", f.fraction,
                  "Brightest-pixel fraction for the global atmosphere");
  cmd->add_option("--guided-radius", f.guided_radius,
                  "Guided filter window radius");
  cmd->add_option("--guided-eps", f.guided_eps,
                  "Guided filter regularization");
  cmd->add_option("--guided-subsample", f.guided_subsample,
                  "Guided filter subsampling factor");
  cmd->add_flag("--dump", f.dump, "Dump per-image intermediates");
  cmd->add_flag("--metrics", f.metrics, "Record metrics in the manifest");
  cmd->add_option("--config", f.config_path,
                  "JSON config file; explicit flags override its values");
}

EnhanceConfig resolve_config(const CLI::App *cmd, const ConfigFlags &f) {
  EnhanceConfig cfg;
  if (cmd->count("--config")) cfg = config_from_json_file(f.config_path, cfg);
  if (cmd->count("--m-detail")) cfg.m_detail = f.m_detail;
  if (cmd->count("--m-bright")) cfg.m_bright = f.m_bright;
  if (cmd->count("--tolerance")) cfg.tolerance = f.tolerance;
  if (cmd->count("--omega")) cfg.omega = f.omega;
  if (cmd->count("--t0")) cfg.t0 = f.t0;
  if (cmd->count("--levels")) cfg.levels = f.levels;
  if (cmd->count("--lighting-mode"))
    cfg.lighting_mode = lighting_mode_from_string(f.lighting_mode);
  if (cmd->count("--fraction")) cfg.atmosphere_fraction = f.fraction;
  if (cmd->count("--guided-radius")) cfg.guided_radius = f.guided_radius;
  if (cmd->count("--guided-eps")) cfg.guided_eps = f.guided_eps;
  if (cmd->count("--guided-subsample")) cfg.guided_subsample = f.guided_subsample;
  if (f.dump) cfg.dump_intermediates = true;
  if (f.metrics) cfg.metrics = true;
  cfg.validate();
  return cfg;
}

std::vector<std::string> expand_inputs(const std::vector<std::string> &args) {
  std::vector<std::string> files;
  for (const std::string &arg : args) {
    if (fs::is_directory(arg)) {
      for (std::string &f : list_image_files(arg)) files.push_back(std::move(f));
    } else {
      files.push_back(arg);
    }
  }
  return files;
}

int cmd_enhance(const CLI::App *cmd, const ConfigFlags &flags,
                const std::vector<std::string> &inputs,
                const std::string &out_dir, int jobs) {
  EnhanceConfig cfg = resolve_config(cmd, flags);
  std::vector<std::string> files = expand_inputs(inputs);
  if (files.empty()) {
    std::fprintf(stderr, "l2uwe: no input images found\n");
    return 2;
  }

  RunManifest manifest = run_enhance(files, out_dir, cfg, jobs);
  for (const auto &rec : manifest.records)
    if (rec.status != "ok")
      std::fprintf(stderr, "l2uwe: warning: %s: %s\n", rec.input.c_str(),
                   rec.error.c_str());

  size_t ok = manifest.ok_count();
  std::printf("processed %zu/%zu images in %.1f ms; manifest: %s\n", ok,
              manifest.records.size(), manifest.total_wall_ms,
              (fs::path(out_dir) / "manifest.json").c_str());
  return ok == 0 ? 2 : 0;
}

int cmd_compare(const std::string &original_dir, const std::string &enhanced_dir,
                const std::string &out_dir) {
  CompareResult result = run_compare(original_dir, enhanced_dir);
  for (const std::string &f : result.unmatched)
    std::fprintf(stderr, "l2uwe: warning: unmatched file %s\n", f.c_str());
  if (result.pairs.empty())
    std::fprintf(stderr, "l2uwe: warning: no matching filenames\n");
  write_compare_outputs(result, out_dir);
  std::fputs(compare_csv(result).c_str(), stdout);
  return 0;
}

int cmd_inspect(const CLI::App *cmd, const ConfigFlags &flags,
                const std::string &input, std::string out_dir) {
  EnhanceConfig cfg = resolve_config(cmd, flags);
  if (out_dir.empty()) {
    fs::path p(input);
    out_dir = (p.parent_path() / (p.stem().string() + "_inspect")).string();
  }

  ImageF img;
  try {
    img = load_image(input);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "l2uwe: %s\n", e.what());
    return 2;
  }
  PipelineArtifacts art = enhance_with_artifacts(img, cfg);
  dump_artifacts(img, art, out_dir);
  if (cfg.metrics) {
    MetricsReport m = compute_metrics(img, art.output);
    std::printf("gcf=%.6g e_score=", m.gcf);
    if (m.e_score)
      std::printf("%.6g", *m.e_score);
    else
      std::fputs("n/a", stdout);
    std::printf(" r_score=%.6g mean_luminance_in=%.6g mean_luminance_out=%.6g\n",
                m.r_score, m.mean_luminance_in, m.mean_luminance_out);
  }
  std::printf("intermediates written to %s\n", out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"L2UWE: low-light underwater image enhancement"};
  app.require_subcommand(1);

  ConfigFlags enh_flags;
  std::vector<std::string> enh_inputs;
  std::string enh_out;
  int jobs = 1;
  CLI::App *enh = app.add_subcommand("enhance", "Enhance images into an output directory");
  enh->add_option("inputs", enh_inputs, "Image files or directories")->required();
  enh->add_option("-o,--out", enh_out, "Output directory")->required();
  enh->add_option("--jobs", jobs, "Images processed concurrently")
      ->envname("L2UWE_JOBS");
  add_config_flags(enh, enh_flags);

  std::string cmp_original, cmp_enhanced, cmp_out;
  CLI::App *cmp = app.add_subcommand("compare", "Metrics for matching image pairs");
  cmp->add_option("original_dir", cmp_original, "Directory of originals")->required();
  cmp->add_option("enhanced_dir", cmp_enhanced, "Directory of enhanced images")->required();
  cmp->add_option("-o,--out", cmp_out, "Report directory (default: enhanced_dir)");

  ConfigFlags ins_flags;
  std::string ins_input, ins_out;
  CLI::App *ins = app.add_subcommand("inspect", "Dump every pipeline intermediate for one image");
  ins->add_option("input", ins_input, "Image file")->required();
  ins->add_option("-o,--out", ins_out, "Dump directory (default: <stem>_inspect)");
  add_config_flags(ins, ins_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(enh))
      return cmd_enhance(enh, enh_flags, enh_inputs, enh_out, jobs);
    if (app.got_subcommand(cmp))
      return cmd_compare(cmp_original, cmp_enhanced,
                         cmp_out.empty() ? cmp_enhanced : cmp_out);
    if (app.got_subcommand(ins))
      return cmd_inspect(ins, ins_flags, ins_input, ins_out);
  } catch (const ConfigError &e) {
    std::fprintf(stderr, "l2uwe: invalid config -- %s\n", e.what());
    return 1;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "l2uwe: %s\n", e.what());
    return 1;
  }
  return 1;
}
