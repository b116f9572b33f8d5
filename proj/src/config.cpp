#include "l2uwe/config.hpp"

namespace l2uwe {

std::string to_string(LightingMode mode) {
  return mode == LightingMode::local_cg ? "local_cg" : "global";
}

LightingMode lighting_mode_from_string(const std::string &name) {
  if (name == "local_cg") return LightingMode::local_cg;
  if (name == "global") return LightingMode::global;
  throw ConfigError("lighting_mode", "must be 'local_cg' or 'global'");
}

void EnhanceConfig::validate() const {
  if (m_detail < 1) throw ConfigError("m_detail", "must be >= 1");
  if (m_bright < 1) throw ConfigError("m_bright", "must be >= 1");
  if (m_detail >= m_bright) throw ConfigError("m_detail", "must be smaller than m_bright");
  if (tolerance < 0.0) throw ConfigError("tolerance", "must be >= 0");
  if (!(omega >= 0.0 && omega <= 1.0)) throw ConfigError("omega", "must be in [0,1]");
  if (!(t0 > 0.0 && t0 < 1.0)) throw ConfigError("t0", "must be in (0,1)");
  if (levels < 1) throw ConfigError("levels", "must be >= 1");
  if (!(atmosphere_fraction > 0.0 && atmosphere_fraction <= 0.05))
    throw ConfigError("fraction", "must be in (0, 0.05]");
  if (guided_radius < 1) throw ConfigError("guided_radius", "must be >= 1");
  if (!(guided_eps > 0.0)) throw ConfigError("guided_eps", "must be positive");
  if (guided_subsample < 1) throw ConfigError("guided_subsample", "must be >= 1");
}

DehazeParams EnhanceConfig::dehaze_params() const {
  DehazeParams params;
  params.omega = omega;
  params.t0 = t0;
  params.guided_radius = guided_radius;
  params.guided_eps = guided_eps;
  params.guided_subsample = guided_subsample;
  return params;
}

}  // namespace l2uwe
