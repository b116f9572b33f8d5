#include "l2uwe/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace l2uwe {
namespace {

struct GrayD {
  int width = 0;
  int height = 0;
  std::vector<double> v;

  double at(int x, int y) const { return v[static_cast<size_t>(y) * width + x]; }
};

GrayD to_gray(const ImageF &img) {
  ImageF lum = luminance(img);
  GrayD g;
  g.width = lum.width;
  g.height = lum.height;
  g.v.assign(lum.data.begin(), lum.data.end());
  return g;
}

// Superpixel halving: each output pixel averages the 2x2 block it covers,
// with true counts at odd edges.
GrayD halve(const GrayD &g) {
  GrayD out;
  out.width = (g.width + 1) / 2;
  out.height = (g.height + 1) / 2;
  out.v.resize(static_cast<size_t>(out.width) * out.height);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      double sum = 0.0;
      int n = 0;
      for (int dy = 0; dy < 2; ++dy) {
        for (int dx = 0; dx < 2; ++dx) {
          int sx = 2 * x + dx;
          int sy = 2 * y + dy;
          if (sx < g.width && sy < g.height) {
            sum += g.at(sx, sy);
            ++n;
          }
        }
      }
      out.v[static_cast<size_t>(y) * out.width + x] = sum / n;
    }
  }
  return out;
}

// Mean over pixels of the mean absolute difference to in-bounds 4-neighbors,
// in gamma-mapped space l = v^(1/2.2).
double local_contrast(const GrayD &g) {
  std::vector<double> l(g.v.size());
  for (size_t i = 0; i < g.v.size(); ++i)
    l[i] = std::pow(std::max(g.v[i], 0.0), 1.0 / 2.2);
  const int w = g.width;
  const int h = g.height;
  double total = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double c = l[static_cast<size_t>(y) * w + x];
      double diff = 0.0;
      int n = 0;
      const int nx[4] = {x - 1, x + 1, x, x};
      const int ny[4] = {y, y, y - 1, y + 1};
      for (int k = 0; k < 4; ++k) {
        if (nx[k] < 0 || nx[k] >= w || ny[k] < 0 || ny[k] >= h) continue;
        diff += std::abs(c - l[static_cast<size_t>(ny[k]) * w + nx[k]]);
        ++n;
      }
      total += diff / n;
    }
  }
  return total / (static_cast<double>(w) * h);
}

// Gradient magnitude of the 1/8-normalized Sobel operator, replicate border.
std::vector<double> sobel_magnitude(const GrayD &g) {
  const int w = g.width;
  const int h = g.height;
  auto clamp = [](int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); };
  std::vector<double> mag(static_cast<size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double p[3][3];
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          p[dy + 1][dx + 1] = g.at(clamp(x + dx, w - 1), clamp(y + dy, h - 1));
      double gx = (p[0][2] + 2.0 * p[1][2] + p[2][2]) -
                  (p[0][0] + 2.0 * p[1][0] + p[2][0]);
      double gy = (p[2][0] + 2.0 * p[2][1] + p[2][2]) -
                  (p[0][0] + 2.0 * p[0][1] + p[0][2]);
      gx /= 8.0;
      gy /= 8.0;
      mag[static_cast<size_t>(y) * w + x] = std::sqrt(gx * gx + gy * gy);
    }
  }
  return mag;
}

}  // namespace

double gcf(const ImageF &img) {
  GrayD g = to_gray(img);
  double total = 0.0;
  for (int r = 1; r <= 9; ++r) {
    if (std::min(g.width, g.height) < 2) break;
    double w_r = (-0.406385 * r / 9.0 + 0.334573) * r / 9.0 + 0.0877526;
    total += w_r * local_contrast(g);
    g = halve(g);
  }
  return total;
}

EdgeScores e_r_scores(const ImageF &original, const ImageF &enhanced) {
  if (original.width != enhanced.width || original.height != enhanced.height)
    throw std::invalid_argument("e_r_scores: dimension mismatch");
  const double theta = 0.1;
  std::vector<double> go = sobel_magnitude(to_gray(original));
  std::vector<double> ge = sobel_magnitude(to_gray(enhanced));

  long n_o = 0;
  long n_e = 0;
  double log_sum = 0.0;
  long n_vis = 0;
  for (size_t i = 0; i < go.size(); ++i) {
    if (go[i] > theta) ++n_o;
    if (ge[i] > theta) {
      ++n_e;
      log_sum += std::log(ge[i] / std::max(go[i], 1e-4));
      ++n_vis;
    }
  }

  EdgeScores s;
  if (n_o > 0) s.e = static_cast<double>(n_e - n_o) / n_o;
  s.r = n_vis > 0 ? std::exp(log_sum / n_vis) : 1.0;
  return s;
}

double mean_luminance(const ImageF &img) {
  ImageF lum = luminance(img);
  double sum = 0.0;
  for (float v : lum.data) sum += v;
  return sum / static_cast<double>(lum.data.size());
}

MetricsReport compute_metrics(const ImageF &original, const ImageF &enhanced) {
  MetricsReport rep;
  rep.gcf = gcf(enhanced);
  EdgeScores s = e_r_scores(original, enhanced);
  rep.e_score = s.e;
  rep.r_score = s.r;
  rep.mean_luminance_in = mean_luminance(original);
  rep.mean_luminance_out = mean_luminance(enhanced);
  return rep;
}

}  // namespace l2uwe
