#pragma once

#include <cstddef>
#include <vector>

namespace l2uwe {

/// Planar floating-point image. Values are nominally in [0,1]; intermediate
/// stages (e.g. radiance recovery) may leave that range until clamped.
/// Layout: data[c*width*height + y*width + x].
struct ImageF {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<float> data;

  ImageF() = default;
  ImageF(int w, int h, int c, float fill = 0.0f);

  std::size_t plane_size() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  std::size_t size() const { return plane_size() * channels; }

  float &at(int x, int y, int c = 0) {
    return data[c * plane_size() + static_cast<std::size_t>(y) * width + x];
  }
  float at(int x, int y, int c = 0) const {
    return data[c * plane_size() + static_cast<std::size_t>(y) * width + x];
  }

  float *plane(int c) { return data.data() + c * plane_size(); }
  const float *plane(int c) const { return data.data() + c * plane_size(); }

  bool same_shape(const ImageF &o) const {
    return width == o.width && height == o.height && channels == o.channels;
  }
};

inline int clampi(int v, int lo, int hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

/// out = 1 - in, channel-wise. Involution on [0,1] data.
ImageF invert(const ImageF &img);

/// Per-pixel mean of the three channels. Rejects single-channel input.
ImageF luminance(const ImageF &img);

/// Clamp every value into [0,1].
ImageF clamp01(ImageF img);

/// True if no value is NaN or infinite.
bool all_finite(const ImageF &img);

/// Mean over all pixels of each channel.
std::vector<double> channel_means(const ImageF &img);

/// Generic bilinear resize (half-pixel-center mapping). Used for the
/// subsampled grid of the fast guided filter; pyramids use their own
/// grid-aligned upsampler.
ImageF resize_bilinear(const ImageF &img, int out_w, int out_h);

}  // namespace l2uwe
