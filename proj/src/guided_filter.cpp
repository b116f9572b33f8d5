#include <cmath>
#include <stdexcept>
#include <vector>

#include "l2uwe/dehaze.hpp"

namespace l2uwe {

namespace {

// Windowed mean with the window clipped at the borders (true sample count in
// the denominator), via a summed-area table.
struct BoxMean {
  int width, height;
  std::vector<double> integral;  // (w+1)*(h+1)

  explicit BoxMean(const ImageF &img) : width(img.width), height(img.height) {
    integral.assign(static_cast<std::size_t>(width + 1) * (height + 1), 0.0);
    const float *src = img.plane(0);
    for (int y = 0; y < height; ++y) {
      double row = 0.0;
      for (int x = 0; x < width; ++x) {
        row += src[static_cast<std::size_t>(y) * width + x];
        integral[static_cast<std::size_t>(y + 1) * (width + 1) + (x + 1)] =
            integral[static_cast<std::size_t>(y) * (width + 1) + (x + 1)] + row;
      }
    }
  }

  double mean(int x, int y, int radius) const {
    const int x0 = std::max(0, x - radius), x1 = std::min(width - 1, x + radius);
    const int y0 = std::max(0, y - radius), y1 = std::min(height - 1, y + radius);
    const double s = integral[static_cast<std::size_t>(y1 + 1) * (width + 1) + (x1 + 1)] -
                     integral[static_cast<std::size_t>(y0) * (width + 1) + (x1 + 1)] -
                     integral[static_cast<std::size_t>(y1 + 1) * (width + 1) + (x0)] +
                     integral[static_cast<std::size_t>(y0) * (width + 1) + (x0)];
    return s / (static_cast<double>(x1 - x0 + 1) * (y1 - y0 + 1));
  }
};

ImageF box_mean(const ImageF &img, int radius) {
  const BoxMean box(img);
  ImageF out(img.width, img.height, 1);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      out.at(x, y) = static_cast<float>(box.mean(x, y, radius));
  return out;
}

ImageF multiply(const ImageF &a, const ImageF &b) {
  ImageF out(a.width, a.height, 1);
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] = static_cast<float>(static_cast<double>(a.data[i]) * b.data[i]);
  return out;
}

}  // namespace

ImageF guided_filter(const ImageF &guide, const ImageF &src, const DehazeParams &params) {
  if (!guide.same_shape(src) || guide.channels != 1)
    throw std::invalid_argument("guided_filter: guide and src must be equal 1-channel images");
  params.validate();

  const int s = params.guided_subsample;
  ImageF g = guide, p = src;
  int radius = params.guided_radius;
  if (s > 1) {
    const int lw = std::max(1, (guide.width + s - 1) / s);
    const int lh = std::max(1, (guide.height + s - 1) / s);
    g = resize_bilinear(guide, lw, lh);
    p = resize_bilinear(src, lw, lh);
    radius = std::max(1, static_cast<int>(std::lround(static_cast<double>(radius) / s)));
  }

  const ImageF mean_g = box_mean(g, radius);
  const ImageF mean_p = box_mean(p, radius);
  const ImageF corr_gg = box_mean(multiply(g, g), radius);
  const ImageF corr_gp = box_mean(multiply(g, p), radius);

  ImageF a(g.width, g.height, 1), b(g.width, g.height, 1);
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const double mg = mean_g.data[i], mp = mean_p.data[i];
    const double var = corr_gg.data[i] - mg * mg;
    const double cov = corr_gp.data[i] - mg * mp;
    const double ai = cov / (var + params.guided_eps);
    a.data[i] = static_cast<float>(ai);
    b.data[i] = static_cast<float>(mp - ai * mg);
  }

  ImageF mean_a = box_mean(a, radius);
  ImageF mean_b = box_mean(b, radius);
  if (s > 1) {
    mean_a = resize_bilinear(mean_a, guide.width, guide.height);
    mean_b = resize_bilinear(mean_b, guide.width, guide.height);
  }

  ImageF out(guide.width, guide.height, 1);
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] = static_cast<float>(static_cast<double>(mean_a.data[i]) * guide.data[i] +
                                     mean_b.data[i]);
  return out;
}

}  // namespace l2uwe
