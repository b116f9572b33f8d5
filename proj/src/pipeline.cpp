#include "l2uwe/pipeline.hpp"

#include "l2uwe/pyramid.hpp"

namespace l2uwe {

PipelineArtifacts enhance_with_artifacts(const ImageF &lowlight, const EnhanceConfig &config) {
  config.validate();
  const DehazeParams params = config.dehaze_params();

  PipelineArtifacts art;
  const ImageF inv = invert(lowlight);
  art.cci = compute_cci(inv, config.tolerance);

  if (config.lighting_mode == LightingMode::local_cg) {
    art.light_detail = smooth_lighting(local_cg_atmosphere(inv, art.cci, config.m_detail));
    art.light_bright = smooth_lighting(local_cg_atmosphere(inv, art.cci, config.m_bright));
  } else {
    const ImageF dark = dark_channel_cg(inv, art.cci);
    const GlobalLight global = global_atmosphere(inv, dark, config.atmosphere_fraction);
    art.light_detail = broadcast_light(global, inv.width, inv.height);
    art.light_bright = art.light_detail;
  }

  art.stage_detail = run_enhance_stage(lowlight, art.cci, art.light_detail, params);
  art.stage_bright = run_enhance_stage(lowlight, art.cci, art.light_bright, params);

  art.weights_detail = compute_weight_maps(art.stage_detail.output);
  art.weights_bright = compute_weight_maps(art.stage_bright.output);
  std::vector<ImageF> normalized =
      normalize_weights({art.weights_detail, art.weights_bright});
  art.norm_weight_detail = normalized[0];
  art.norm_weight_bright = normalized[1];

  const int levels = auto_pyramid_levels(lowlight.width, lowlight.height, config.levels);
  art.fused_preclamp = fuse_multiscale_raw(
      {art.stage_detail.output, art.stage_bright.output}, normalized, levels);
  art.output = clamp01(art.fused_preclamp);
  return art;
}

ImageF enhance(const ImageF &lowlight, const EnhanceConfig &config) {
  return enhance_with_artifacts(lowlight, config).output;
}

}  // namespace l2uwe
