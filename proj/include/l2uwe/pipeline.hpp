#pragma once

#include "l2uwe/config.hpp"
#include "l2uwe/fusion.hpp"

namespace l2uwe {

/// Everything the pipeline computes on the way to the final image.
struct PipelineArtifacts {
  ContrastCodeImage cci;
  LightingField light_detail;  // smoothed field behind input 1
  LightingField light_bright;  // smoothed field behind input 2
  EnhanceStage stage_detail;
  EnhanceStage stage_bright;
  WeightMaps weights_detail;
  WeightMaps weights_bright;
  ImageF norm_weight_detail;
  ImageF norm_weight_bright;
  ImageF fused_preclamp;
  ImageF output;
};

/// Full enhancement: contrast code image on the inverted input, two
/// differently-lit dehazing passes, weight computation, multi-scale fusion.
ImageF enhance(const ImageF &lowlight, const EnhanceConfig &config);

/// Same, returning every intermediate for inspection.
PipelineArtifacts enhance_with_artifacts(const ImageF &lowlight, const EnhanceConfig &config);

}  // namespace l2uwe
