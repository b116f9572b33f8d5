#include "l2uwe/cci.hpp"

#include <cmath>
#include <stdexcept>

namespace l2uwe {

ContrastCodeImage::ContrastCodeImage(int w, int h, std::uint8_t fill) {
  if (w < 1 || h < 1)
    throw std::invalid_argument("ContrastCodeImage: dimensions must be >= 1");
  width = w;
  height = h;
  codes.assign(static_cast<std::size_t>(w) * h, fill);
}

namespace {

// Summed-area tables of values and squared values over the image padded by
// kMaxCode on every side with replicated pixels. Padding materializes the
// duplicate samples that replicate borders contribute to a window, so any
// code's window is a plain rectangle lookup with a fixed sample count.
struct WindowStats {
  int width = 0, height = 0;   // original dimensions
  int pw = 0, ph = 0;          // padded dimensions
  std::vector<double> sum;     // (pw+1)*(ph+1) per channel, concatenated
  std::vector<double> sum_sq;

  explicit WindowStats(const ImageF &img) {
    width = img.width;
    height = img.height;
    pw = width + 2 * kMaxCode;
    ph = height + 2 * kMaxCode;
    const std::size_t table = static_cast<std::size_t>(pw + 1) * (ph + 1);
    sum.assign(table * img.channels, 0.0);
    sum_sq.assign(table * img.channels, 0.0);
    for (int c = 0; c < img.channels; ++c) {
      const float *src = img.plane(c);
      double *s = sum.data() + table * c;
      double *q = sum_sq.data() + table * c;
      for (int y = 0; y < ph; ++y) {
        const int sy = clampi(y - kMaxCode, 0, height - 1);
        double row_s = 0.0, row_q = 0.0;
        for (int x = 0; x < pw; ++x) {
          const int sx = clampi(x - kMaxCode, 0, width - 1);
          const double v = src[static_cast<std::size_t>(sy) * width + sx];
          row_s += v;
          row_q += v * v;
          const std::size_t idx = static_cast<std::size_t>(y + 1) * (pw + 1) + (x + 1);
          s[idx] = s[idx - (pw + 1)] + row_s;
          q[idx] = q[idx - (pw + 1)] + row_q;
        }
      }
    }
  }

  // Window sums over the patch of radius `code` centered at (x, y), summed
  // across all channels of the padded image.
  void window(int x, int y, int code, int channels, double &out_s, double &out_q) const {
    const std::size_t table = static_cast<std::size_t>(pw + 1) * (ph + 1);
    const int x0 = x + kMaxCode - code, x1 = x + kMaxCode + code + 1;
    const int y0 = y + kMaxCode - code, y1 = y + kMaxCode + code + 1;
    out_s = 0.0;
    out_q = 0.0;
    for (int c = 0; c < channels; ++c) {
      const double *s = sum.data() + table * c;
      const double *q = sum_sq.data() + table * c;
      const std::size_t a = static_cast<std::size_t>(y0) * (pw + 1) + x0;
      const std::size_t b = static_cast<std::size_t>(y0) * (pw + 1) + x1;
      const std::size_t d = static_cast<std::size_t>(y1) * (pw + 1) + x0;
      const std::size_t e = static_cast<std::size_t>(y1) * (pw + 1) + x1;
      out_s += s[e] - s[b] - s[d] + s[a];
      out_q += q[e] - q[b] - q[d] + q[a];
    }
  }
};

double std_from_sums(double s, double q, int n) {
  const double mean = s / n;
  const double var = q / n - mean * mean;
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

void check_code(int code) {
  if (code < kMinCode || code > kMaxCode)
    throw std::invalid_argument("cci: code out of range");
}

}  // namespace

ImageF local_std(const ImageF &img, int code) {
  check_code(code);
  const WindowStats stats(img);
  const int side = patch_side(code);
  const int n = img.channels * side * side;
  ImageF out(img.width, img.height, 1);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      double s, q;
      stats.window(x, y, code, img.channels, s, q);
      out.at(x, y) = static_cast<float>(std_from_sums(s, q, n));
    }
  return out;
}

ContrastCodeImage compute_cci(const ImageF &img, double tolerance) {
  if (tolerance < 0.0) throw std::invalid_argument("compute_cci: tolerance must be >= 0");
  const WindowStats stats(img);
  ContrastCodeImage cci(img.width, img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      int best_code = kMinCode;
      double best_score = 0.0;
      for (int code = kMinCode; code <= kMaxCode; ++code) {
        double s, q;
        stats.window(x, y, code, img.channels, s, q);
        const int side = patch_side(code);
        const double sigma = std_from_sums(s, q, img.channels * side * side);
        const double score = sigma - tolerance * (code - 1);
        if (code == kMinCode || score <= best_score) {
          best_score = score;
          best_code = code;
        }
      }
      cci.at(x, y) = static_cast<std::uint8_t>(best_code);
    }
  return cci;
}

}  // namespace l2uwe
