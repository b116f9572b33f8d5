#pragma once

#include <array>

#include "l2uwe/cci.hpp"
#include "l2uwe/image.hpp"

namespace l2uwe {

/// Floor applied to every lighting value so later normalization and radiance
/// recovery never divide by (near-)zero.
inline constexpr float kLightFloor = 1e-3f;

/// Per-pixel, per-channel atmospheric light in (kLightFloor, 1].
struct LightingField {
  ImageF image;  // 3-channel
};

/// One atmospheric light value per channel.
using GlobalLight = std::array<float, 3>;

/// Per-channel windowed minimum, window side 2*code+1 taken from the code at
/// each pixel, replicate borders.
ImageF min_image(const ImageF &img, const ContrastCodeImage &cci);

/// Channel-wise minimum of min_image: the contrast-guided dark channel.
ImageF dark_channel_cg(const ImageF &img, const ContrastCodeImage &cci);

/// Global estimate: per-channel maximum of the image over the positions of
/// the brightest `fraction` of dark-channel pixels. 0 < fraction <= 0.05.
GlobalLight global_atmosphere(const ImageF &img, const ImageF &dark, double fraction);

/// Side of the lighting patch for multiplication factor m and code c,
/// rounded to the nearest odd integer (ties up), never below 3.
int s_upsilon(int m, int code);

/// Local contrast-guided lighting: per channel, the maximum of min_image
/// over the patch of side s_upsilon(m, code(x)) centered at each pixel.
LightingField local_cg_atmosphere(const ImageF &img, const ContrastCodeImage &cci, int m);

/// Gaussian smoothing (sigma=10) of the field, per channel, re-floored.
LightingField smooth_lighting(const LightingField &field);

/// Constant field holding a global estimate at every pixel.
LightingField broadcast_light(const GlobalLight &light, int width, int height);

}  // namespace l2uwe
