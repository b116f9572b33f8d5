#include "l2uwe/fusion.hpp"

#include <cmath>
#include <stdexcept>

#include "l2uwe/filters.hpp"
#include "l2uwe/pyramid.hpp"

namespace l2uwe {

ImageF saliency_weight(const ImageF &input) {
  if (input.channels != 3)
    throw std::invalid_argument("saliency_weight: 3-channel input required");
  const ImageF blurred = binomial5_blur(input);
  const std::vector<double> mean = channel_means(input);
  ImageF out(input.width, input.height, 1);
  const std::size_t n = out.plane_size();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) {
      const double d = blurred.plane(c)[i] - mean[c];
      acc += d * d;
    }
    out.data[i] = static_cast<float>(std::sqrt(acc));
  }
  return out;
}

ImageF luminance_weight(const ImageF &input) {
  if (input.channels != 3)
    throw std::invalid_argument("luminance_weight: 3-channel input required");
  ImageF out(input.width, input.height, 1);
  const std::size_t n = out.plane_size();
  const float *r = input.plane(0);
  const float *g = input.plane(1);
  const float *b = input.plane(2);
  for (std::size_t i = 0; i < n; ++i) {
    const double lum = (static_cast<double>(r[i]) + g[i] + b[i]) / 3.0;
    const double dr = r[i] - lum, dg = g[i] - lum, db = b[i] - lum;
    out.data[i] = static_cast<float>(std::sqrt((dr * dr + dg * dg + db * db) / 3.0));
  }
  return out;
}

ImageF local_contrast_weight(const ImageF &input) {
  const ImageF lum = luminance(input);
  const int w = lum.width, h = lum.height;
  ImageF out(w, h, 1);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double acc = 8.0 * lum.at(x, y);
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          acc -= lum.at(clampi(x + dx, 0, w - 1), clampi(y + dy, 0, h - 1));
        }
      out.at(x, y) = static_cast<float>(std::fabs(acc / 8.0));
    }
  return out;
}

WeightMaps compute_weight_maps(const ImageF &input) {
  return WeightMaps{saliency_weight(input), luminance_weight(input),
                    local_contrast_weight(input)};
}

std::vector<ImageF> normalize_weights(const std::vector<WeightMaps> &maps) {
  const std::size_t k_inputs = maps.size();
  if (k_inputs < 2)
    throw std::invalid_argument("normalize_weights: at least two inputs required");
  const ImageF &ref = maps[0].saliency;
  for (const WeightMaps &wm : maps)
    if (!wm.saliency.same_shape(ref) || !wm.luminance.same_shape(ref) ||
        !wm.local_contrast.same_shape(ref))
      throw std::invalid_argument("normalize_weights: weight map shape mismatch");

  const std::size_t n = ref.plane_size();
  std::vector<std::vector<double>> products(k_inputs, std::vector<double>(n));
  for (std::size_t k = 0; k < k_inputs; ++k)
    for (std::size_t i = 0; i < n; ++i)
      products[k][i] = static_cast<double>(maps[k].saliency.data[i]) *
                       maps[k].luminance.data[i] * maps[k].local_contrast.data[i];

  std::vector<ImageF> normalized(k_inputs, ImageF(ref.width, ref.height, 1));
  for (std::size_t i = 0; i < n; ++i) {
    double total = k_inputs * kWeightDelta;
    for (std::size_t k = 0; k < k_inputs; ++k) total += products[k][i];
    for (std::size_t k = 0; k < k_inputs; ++k)
      normalized[k].data[i] = static_cast<float>((products[k][i] + kWeightDelta) / total);
  }
  return normalized;
}

ImageF fuse_multiscale_raw(const std::vector<ImageF> &inputs,
                           const std::vector<ImageF> &weights, int levels) {
  if (inputs.empty() || inputs.size() != weights.size())
    throw std::invalid_argument("fuse_multiscale: inputs and weights must pair up");
  const ImageF &ref = inputs[0];
  for (const ImageF &img : inputs)
    if (!img.same_shape(ref))
      throw std::invalid_argument("fuse_multiscale: input shape mismatch");
  for (const ImageF &w : weights)
    if (w.width != ref.width || w.height != ref.height || w.channels != 1)
      throw std::invalid_argument("fuse_multiscale: weight shape mismatch");

  std::vector<Pyramid> weight_pyrs, input_pyrs;
  weight_pyrs.reserve(inputs.size());
  input_pyrs.reserve(inputs.size());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    weight_pyrs.push_back(build_gaussian_pyramid(weights[k], levels));
    input_pyrs.push_back(build_laplacian_pyramid(inputs[k], levels));
  }

  Pyramid fused;
  fused.kind = PyramidKind::laplacian;
  fused.levels.reserve(levels);
  for (int l = 0; l < levels; ++l) {
    const ImageF &shape = input_pyrs[0].levels[l];
    ImageF level(shape.width, shape.height, shape.channels);
    const std::size_t n = level.plane_size();
    for (int c = 0; c < shape.channels; ++c) {
      float *dst = level.plane(c);
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < inputs.size(); ++k)
          acc += static_cast<double>(weight_pyrs[k].levels[l].data[i]) *
                 input_pyrs[k].levels[l].plane(c)[i];
        dst[i] = static_cast<float>(acc);
      }
    }
    fused.levels.push_back(std::move(level));
  }
  return collapse_pyramid(fused);
}

ImageF fuse_multiscale(const std::vector<ImageF> &inputs,
                       const std::vector<ImageF> &weights, int levels) {
  return clamp01(fuse_multiscale_raw(inputs, weights, levels));
}

}  // namespace l2uwe
