#include "l2uwe/pyramid.hpp"

#include <cmath>
#include <stdexcept>

#include "l2uwe/filters.hpp"

namespace l2uwe {

int auto_pyramid_levels(int width, int height, int requested) {
  const int short_side = std::min(width, height);
  int max_levels = 1;
  if (short_side >= 8)
    max_levels = static_cast<int>(std::floor(std::log2(short_side / 8.0))) + 1;
  return std::max(1, std::min(requested, max_levels));
}

ImageF pyramid_downsample(const ImageF &img) {
  const ImageF blurred = gaussian_blur(img, 1.0);
  const int ow = (img.width + 1) / 2;
  const int oh = (img.height + 1) / 2;
  ImageF out(ow, oh, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    const float *src = blurred.plane(c);
    float *dst = out.plane(c);
    for (int y = 0; y < oh; ++y)
      for (int x = 0; x < ow; ++x)
        dst[static_cast<std::size_t>(y) * ow + x] =
            src[static_cast<std::size_t>(2 * y) * img.width + 2 * x];
  }
  return out;
}

ImageF pyramid_upsample(const ImageF &img, int out_w, int out_h) {
  ImageF out(out_w, out_h, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    const float *src = img.plane(c);
    float *dst = out.plane(c);
    for (int y = 0; y < out_h; ++y) {
      const int y0 = std::min(y / 2, img.height - 1);
      const int y1 = std::min(y0 + 1, img.height - 1);
      const bool y_mid = (y % 2) != 0;
      for (int x = 0; x < out_w; ++x) {
        const int x0 = std::min(x / 2, img.width - 1);
        const int x1 = std::min(x0 + 1, img.width - 1);
        const bool x_mid = (x % 2) != 0;
        const double v00 = src[static_cast<std::size_t>(y0) * img.width + x0];
        const double v01 = src[static_cast<std::size_t>(y0) * img.width + x1];
        const double v10 = src[static_cast<std::size_t>(y1) * img.width + x0];
        const double v11 = src[static_cast<std::size_t>(y1) * img.width + x1];
        const double top = x_mid ? 0.5 * (v00 + v01) : v00;
        const double bot = x_mid ? 0.5 * (v10 + v11) : v10;
        dst[static_cast<std::size_t>(y) * out_w + x] =
            static_cast<float>(y_mid ? 0.5 * (top + bot) : top);
      }
    }
  }
  return out;
}

static void check_depth(const ImageF &img, int levels) {
  if (levels < 1) throw std::invalid_argument("pyramid: levels must be >= 1");
  if (levels == 1) return;
  const double short_side = std::min(img.width, img.height);
  if (short_side / std::exp2(levels - 1) < 2.0)
    throw std::invalid_argument("pyramid: too many levels for image size");
}

Pyramid build_gaussian_pyramid(const ImageF &img, int levels) {
  check_depth(img, levels);
  Pyramid pyr;
  pyr.kind = PyramidKind::gaussian;
  pyr.levels.reserve(levels);
  pyr.levels.push_back(img);
  for (int k = 1; k < levels; ++k)
    pyr.levels.push_back(pyramid_downsample(pyr.levels.back()));
  return pyr;
}

Pyramid build_laplacian_pyramid(const ImageF &img, int levels) {
  Pyramid gauss = build_gaussian_pyramid(img, levels);
  Pyramid pyr;
  pyr.kind = PyramidKind::laplacian;
  pyr.levels.reserve(levels);
  for (int k = 0; k + 1 < levels; ++k) {
    const ImageF &fine = gauss.levels[k];
    ImageF up = pyramid_upsample(gauss.levels[k + 1], fine.width, fine.height);
    ImageF detail(fine.width, fine.height, fine.channels);
    for (std::size_t i = 0; i < detail.data.size(); ++i)
      detail.data[i] = fine.data[i] - up.data[i];
    pyr.levels.push_back(std::move(detail));
  }
  pyr.levels.push_back(std::move(gauss.levels.back()));
  return pyr;
}

ImageF collapse_pyramid(const Pyramid &pyr) {
  if (pyr.kind != PyramidKind::laplacian)
    throw std::invalid_argument("collapse_pyramid: laplacian pyramid required");
  if (pyr.levels.empty()) throw std::invalid_argument("collapse_pyramid: empty pyramid");
  ImageF acc = pyr.levels.back();
  for (int k = static_cast<int>(pyr.levels.size()) - 2; k >= 0; --k) {
    const ImageF &detail = pyr.levels[k];
    ImageF up = pyramid_upsample(acc, detail.width, detail.height);
    for (std::size_t i = 0; i < up.data.size(); ++i) up.data[i] += detail.data[i];
    acc = std::move(up);
  }
  return acc;
}

}  // namespace l2uwe
