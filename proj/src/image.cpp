#include "l2uwe/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace l2uwe {

ImageF::ImageF(int w, int h, int c, float fill) {
  if (w < 1 || h < 1) throw std::invalid_argument("ImageF: dimensions must be >= 1");
  if (c != 1 && c != 3) throw std::invalid_argument("ImageF: channels must be 1 or 3");
  width = w;
  height = h;
  channels = c;
  data.assign(size(), fill);
}

ImageF invert(const ImageF &img) {
  ImageF out = img;
  for (float &v : out.data) v = 1.0f - v;
  return out;
}

ImageF luminance(const ImageF &img) {
  if (img.channels != 3)
    throw std::invalid_argument("luminance: 3-channel input required");
  ImageF out(img.width, img.height, 1);
  const float *r = img.plane(0);
  const float *g = img.plane(1);
  const float *b = img.plane(2);
  const std::size_t n = img.plane_size();
  for (std::size_t i = 0; i < n; ++i)
    out.data[i] = static_cast<float>((static_cast<double>(r[i]) + g[i] + b[i]) / 3.0);
  return out;
}

ImageF clamp01(ImageF img) {
  for (float &v : img.data) v = std::min(1.0f, std::max(0.0f, v));
  return img;
}

bool all_finite(const ImageF &img) {
  for (float v : img.data)
    if (!std::isfinite(v)) return false;
  return true;
}

std::vector<double> channel_means(const ImageF &img) {
  std::vector<double> means(img.channels, 0.0);
  const std::size_t n = img.plane_size();
  for (int c = 0; c < img.channels; ++c) {
    double acc = 0.0;
    const float *p = img.plane(c);
    for (std::size_t i = 0; i < n; ++i) acc += p[i];
    means[c] = acc / static_cast<double>(n);
  }
  return means;
}

ImageF resize_bilinear(const ImageF &img, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1)
    throw std::invalid_argument("resize_bilinear: output dimensions must be >= 1");
  if (out_w == img.width && out_h == img.height) return img;
  ImageF out(out_w, out_h, img.channels);
  const double sx = static_cast<double>(img.width) / out_w;
  const double sy = static_cast<double>(img.height) / out_h;
  for (int c = 0; c < img.channels; ++c) {
    const float *src = img.plane(c);
    float *dst = out.plane(c);
    for (int y = 0; y < out_h; ++y) {
      const double fy = (y + 0.5) * sy - 0.5;
      const int fy0 = static_cast<int>(std::floor(fy));
      const int y0 = clampi(fy0, 0, img.height - 1);
      const int y1 = clampi(fy0 + 1, 0, img.height - 1);
      const double wy = fy - fy0;
      for (int x = 0; x < out_w; ++x) {
        const double fx = (x + 0.5) * sx - 0.5;
        const int fx0 = static_cast<int>(std::floor(fx));
        const int x0 = clampi(fx0, 0, img.width - 1);
        const int x1 = clampi(fx0 + 1, 0, img.width - 1);
        const double wx = fx - fx0;
        const double top = src[y0 * img.width + x0] * (1.0 - wx) + src[y0 * img.width + x1] * wx;
        const double bot = src[y1 * img.width + x0] * (1.0 - wx) + src[y1 * img.width + x1] * wx;
        dst[y * out_w + x] = static_cast<float>(top * (1.0 - wy) + bot * wy);
      }
    }
  }
  return out;
}

}  // namespace l2uwe
