#pragma once

#include "l2uwe/cci.hpp"
#include "l2uwe/image.hpp"
#include "l2uwe/lighting.hpp"

namespace l2uwe {

/// Per-pixel transmission in [0,1].
struct TransmissionMap {
  ImageF map;  // 1-channel
};

struct DehazeParams {
  double omega = 0.95;      // haze retention factor in [0,1]
  double t0 = 0.1;          // transmission lower bound in (0,1)
  int guided_radius = 16;   // guided filter window radius, pixels
  double guided_eps = 1e-3; // guided filter regularizer
  int guided_subsample = 4; // fast guided filter grid factor, >= 1

  void validate() const;
};

/// t = 1 - omega * dark_channel_cg(min(inv/light, 1)), clamped to [0,1].
TransmissionMap transmission_cg(const ImageF &inv, const LightingField &light,
                                const ContrastCodeImage &cci, double omega);

/// Edge-preserving smoothing of src steered by guide (local linear model per
/// window). With guided_subsample > 1 the window statistics are computed on a
/// subsampled grid and the model coefficients upsampled bilinearly.
ImageF guided_filter(const ImageF &guide, const ImageF &src, const DehazeParams &params);

/// J = (inv - A) / max(t, t0) + A per channel. Not clamped; callers clamp
/// after re-inversion.
ImageF recover_radiance(const ImageF &inv, const LightingField &light,
                        const TransmissionMap &t, double t0);

/// One full enhancement pass: invert, contrast-guided lighting with factor m,
/// transmission + guided refinement, radiance recovery, re-invert, clamp.
/// The cci must come from the inverted image.
ImageF enhance_single(const ImageF &lowlight, const ContrastCodeImage &cci, int m,
                      const DehazeParams &params);

/// Same pass with a caller-supplied lighting field (used for the global
/// lighting baseline).
ImageF enhance_with_light(const ImageF &lowlight, const ContrastCodeImage &cci,
                          const LightingField &light, const DehazeParams &params);

/// Intermediates of one enhancement pass, kept for inspect-mode dumps.
struct EnhanceStage {
  ImageF t_raw;      // 1ch, before guided refinement
  ImageF t_refined;  // 1ch
  ImageF output;     // 3ch enhanced image
};

EnhanceStage run_enhance_stage(const ImageF &lowlight, const ContrastCodeImage &cci,
                               const LightingField &light, const DehazeParams &params);

}  // namespace l2uwe
