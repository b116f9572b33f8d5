#include "l2uwe/dehaze.hpp"

#include <algorithm>
#include <stdexcept>

namespace l2uwe {

void DehazeParams::validate() const {
  if (!(omega >= 0.0 && omega <= 1.0))
    throw std::invalid_argument("omega must be in [0,1]");
  if (!(t0 > 0.0 && t0 < 1.0)) throw std::invalid_argument("t0 must be in (0,1)");
  if (guided_radius < 1) throw std::invalid_argument("guided_radius must be >= 1");
  if (!(guided_eps > 0.0)) throw std::invalid_argument("guided_eps must be positive");
  if (guided_subsample < 1) throw std::invalid_argument("guided_subsample must be >= 1");
}

TransmissionMap transmission_cg(const ImageF &inv, const LightingField &light,
                                const ContrastCodeImage &cci, double omega) {
  if (!inv.same_shape(light.image))
    throw std::invalid_argument("transmission_cg: lighting field shape mismatch");
  if (!(omega >= 0.0 && omega <= 1.0))
    throw std::invalid_argument("transmission_cg: omega must be in [0,1]");

  ImageF normalized(inv.width, inv.height, 3);
  for (std::size_t i = 0; i < normalized.data.size(); ++i) {
    const double ratio = static_cast<double>(inv.data[i]) / light.image.data[i];
    normalized.data[i] = static_cast<float>(std::min(ratio, 1.0));
  }

  const ImageF dark = dark_channel_cg(normalized, cci);
  TransmissionMap t{ImageF(inv.width, inv.height, 1)};
  for (std::size_t i = 0; i < t.map.data.size(); ++i)
    t.map.data[i] = static_cast<float>(1.0 - omega * dark.data[i]);
  t.map = clamp01(std::move(t.map));
  return t;
}

ImageF recover_radiance(const ImageF &inv, const LightingField &light,
                        const TransmissionMap &t, double t0) {
  if (!inv.same_shape(light.image))
    throw std::invalid_argument("recover_radiance: lighting field shape mismatch");
  if (inv.width != t.map.width || inv.height != t.map.height)
    throw std::invalid_argument("recover_radiance: transmission shape mismatch");
  if (!(t0 > 0.0 && t0 < 1.0))
    throw std::invalid_argument("recover_radiance: t0 must be in (0,1)");

  ImageF out(inv.width, inv.height, 3);
  const std::size_t n = inv.plane_size();
  for (int c = 0; c < 3; ++c) {
    const float *ip = inv.plane(c);
    const float *ap = light.image.plane(c);
    float *jp = out.plane(c);
    for (std::size_t i = 0; i < n; ++i) {
      const double denom = std::max(static_cast<double>(t.map.data[i]), t0);
      jp[i] = static_cast<float>((static_cast<double>(ip[i]) - ap[i]) / denom + ap[i]);
    }
  }
  return out;
}

EnhanceStage run_enhance_stage(const ImageF &lowlight, const ContrastCodeImage &cci,
                               const LightingField &light, const DehazeParams &params) {
  params.validate();
  const ImageF inv = invert(lowlight);
  TransmissionMap t_raw = transmission_cg(inv, light, cci, params.omega);
  TransmissionMap t{clamp01(guided_filter(luminance(inv), t_raw.map, params))};
  const ImageF recovered = recover_radiance(inv, light, t, params.t0);
  EnhanceStage stage;
  stage.t_raw = std::move(t_raw.map);
  stage.t_refined = t.map;
  stage.output = clamp01(invert(recovered));
  return stage;
}

ImageF enhance_with_light(const ImageF &lowlight, const ContrastCodeImage &cci,
                          const LightingField &light, const DehazeParams &params) {
  return run_enhance_stage(lowlight, cci, light, params).output;
}

ImageF enhance_single(const ImageF &lowlight, const ContrastCodeImage &cci, int m,
                      const DehazeParams &params) {
  const ImageF inv = invert(lowlight);
  const LightingField light = smooth_lighting(local_cg_atmosphere(inv, cci, m));
  return enhance_with_light(lowlight, cci, light, params);
}

}  // namespace l2uwe
