#include "l2uwe/lighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "l2uwe/filters.hpp"

namespace l2uwe {

namespace {

// Sliding window extremum over src[max(0,i-r) .. min(n-1,i+r)] using a
// monotonic index queue. Strided so rows and columns share one routine.
template <bool TakeMin>
void sliding_extremum(const float *src, int n, int stride, int radius, float *out, int out_stride) {
  std::vector<int> deque(n);
  int head = 0, tail = 0;  // [head, tail) holds candidate indices
  auto value = [&](int i) { return src[static_cast<std::size_t>(i) * stride]; };
  auto dominates = [](float a, float b) { return TakeMin ? a <= b : a >= b; };
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int hi = std::min(n - 1, i + radius);
    for (; next <= hi; ++next) {
      while (tail > head && dominates(value(next), value(deque[tail - 1]))) --tail;
      deque[tail++] = next;
    }
    while (deque[head] < i - radius) ++head;
    out[static_cast<std::size_t>(i) * out_stride] = value(deque[head]);
  }
}

template <bool TakeMin>
ImageF window_extremum(const ImageF &img, int side) {
  const int radius = side / 2;
  const int w = img.width, h = img.height;
  ImageF tmp(w, h, img.channels);
  ImageF out(w, h, img.channels);
  std::vector<float> col(h);
  std::vector<float> col_out(h);
  for (int c = 0; c < img.channels; ++c) {
    for (int y = 0; y < h; ++y)
      sliding_extremum<TakeMin>(img.plane(c) + static_cast<std::size_t>(y) * w, w, 1, radius,
                                tmp.plane(c) + static_cast<std::size_t>(y) * w, 1);
    for (int x = 0; x < w; ++x)
      sliding_extremum<TakeMin>(tmp.plane(c) + x, h, w, radius, out.plane(c) + x, w);
  }
  return out;
}

void check_cci_shape(const ImageF &img, const ContrastCodeImage &cci) {
  if (img.width != cci.width || img.height != cci.height)
    throw std::invalid_argument("cci dimensions do not match image");
  for (std::uint8_t code : cci.codes)
    if (code < kMinCode || code > kMaxCode)
      throw std::invalid_argument("cci contains a code outside {1..7}");
}

// Per-pixel selection between the per-code extremum maps: run the windowed
// pass once per code present, then gather by each pixel's own code.
template <bool TakeMin>
ImageF select_by_code(const ImageF &img, const ContrastCodeImage &cci,
                      const std::array<int, kMaxCode + 1> &side_for_code) {
  std::array<bool, kMaxCode + 1> present{};
  for (std::uint8_t code : cci.codes) present[code] = true;

  ImageF out(img.width, img.height, img.channels);
  for (int code = kMinCode; code <= kMaxCode; ++code) {
    if (!present[code]) continue;
    const ImageF map = window_extremum<TakeMin>(img, side_for_code[code]);
    const std::size_t n = img.plane_size();
    for (int c = 0; c < img.channels; ++c) {
      const float *src = map.plane(c);
      float *dst = out.plane(c);
      for (std::size_t i = 0; i < n; ++i)
        if (cci.codes[i] == code) dst[i] = src[i];
    }
  }
  return out;
}

}  // namespace

ImageF min_image(const ImageF &img, const ContrastCodeImage &cci) {
  check_cci_shape(img, cci);
  std::array<int, kMaxCode + 1> sides{};
  for (int code = kMinCode; code <= kMaxCode; ++code) sides[code] = patch_side(code);
  return select_by_code<true>(img, cci, sides);
}

ImageF dark_channel_cg(const ImageF &img, const ContrastCodeImage &cci) {
  const ImageF mins = min_image(img, cci);
  ImageF out(img.width, img.height, 1);
  const std::size_t n = out.plane_size();
  for (std::size_t i = 0; i < n; ++i) {
    float v = mins.data[i];
    for (int c = 1; c < mins.channels; ++c) v = std::min(v, mins.plane(c)[i]);
    out.data[i] = v;
  }
  return out;
}

GlobalLight global_atmosphere(const ImageF &img, const ImageF &dark, double fraction) {
  if (!(fraction > 0.0 && fraction <= 0.05))
    throw std::invalid_argument("global_atmosphere: fraction must be in (0, 0.05]");
  if (img.width != dark.width || img.height != dark.height || dark.channels != 1)
    throw std::invalid_argument("global_atmosphere: dark channel shape mismatch");

  const std::size_t total = dark.plane_size();
  const std::size_t n_select = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(fraction * img.width * img.height)));

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  auto brighter = [&dark](std::size_t a, std::size_t b) {
    if (dark.data[a] != dark.data[b]) return dark.data[a] > dark.data[b];
    return a < b;
  };
  std::nth_element(order.begin(), order.begin() + (n_select - 1), order.end(), brighter);

  GlobalLight light{kLightFloor, kLightFloor, kLightFloor};
  for (std::size_t k = 0; k < n_select; ++k)
    for (int c = 0; c < 3; ++c)
      light[c] = std::max(light[c], img.plane(c)[order[k]]);
  return light;
}

int s_upsilon(int m, int code) {
  if (m < 1) throw std::invalid_argument("s_upsilon: m must be >= 1");
  if (code < kMinCode || code > kMaxCode)
    throw std::invalid_argument("s_upsilon: code out of range");
  const double s = 3.0 * m - (m / 3.0) * (code - 1);
  const int half = static_cast<int>(std::floor((s - 1.0) / 2.0 + 0.5));
  return std::max(3, 2 * half + 1);
}

LightingField local_cg_atmosphere(const ImageF &img, const ContrastCodeImage &cci, int m) {
  check_cci_shape(img, cci);
  if (m < 1) throw std::invalid_argument("local_cg_atmosphere: m must be >= 1");
  const ImageF mins = min_image(img, cci);
  std::array<int, kMaxCode + 1> sides{};
  for (int code = kMinCode; code <= kMaxCode; ++code) sides[code] = s_upsilon(m, code);
  LightingField field{select_by_code<false>(mins, cci, sides)};
  for (float &v : field.image.data) v = std::max(v, kLightFloor);
  return field;
}

LightingField smooth_lighting(const LightingField &field) {
  LightingField out{gaussian_blur(field.image, 10.0)};
  for (float &v : out.image.data) v = std::min(1.0f, std::max(v, kLightFloor));
  return out;
}

LightingField broadcast_light(const GlobalLight &light, int width, int height) {
  LightingField field{ImageF(width, height, 3)};
  for (int c = 0; c < 3; ++c) {
    const float v = std::min(1.0f, std::max(light[c], kLightFloor));
    float *p = field.image.plane(c);
    std::fill(p, p + field.image.plane_size(), v);
  }
  return field;
}

}  // namespace l2uwe
