#include "l2uwe/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace l2uwe {

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    k[i + radius] = w;
    sum += w;
  }
  for (double &w : k) w /= sum;
  return k;
}

ImageF separable_convolve(const ImageF &img, const std::vector<double> &kernel) {
  const int radius = static_cast<int>(kernel.size()) / 2;
  const int w = img.width, h = img.height;

  ImageF tmp(w, h, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    const float *src = img.plane(c);
    float *dst = tmp.plane(c);
    for (int y = 0; y < h; ++y) {
      const float *row = src + static_cast<std::size_t>(y) * w;
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int i = -radius; i <= radius; ++i)
          acc += kernel[i + radius] * row[clampi(x + i, 0, w - 1)];
        dst[static_cast<std::size_t>(y) * w + x] = static_cast<float>(acc);
      }
    }
  }

  ImageF out(w, h, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    const float *src = tmp.plane(c);
    float *dst = out.plane(c);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int i = -radius; i <= radius; ++i)
          acc += kernel[i + radius] * src[static_cast<std::size_t>(clampi(y + i, 0, h - 1)) * w + x];
        dst[static_cast<std::size_t>(y) * w + x] = static_cast<float>(acc);
      }
    }
  }
  return out;
}

ImageF gaussian_blur(const ImageF &img, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_blur: sigma must be positive");
  return separable_convolve(img, gaussian_kernel(sigma));
}

ImageF binomial5_blur(const ImageF &img) {
  static const std::vector<double> kernel = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
  return separable_convolve(img, kernel);
}

}  // namespace l2uwe
