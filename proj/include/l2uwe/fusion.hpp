#pragma once

#include <vector>

#include "l2uwe/image.hpp"

namespace l2uwe {

/// Regularizer added to every product weight so all-zero pixels still split
/// evenly across inputs.
inline constexpr double kWeightDelta = 1e-6;

/// The three per-input weight maps steering the fusion.
struct WeightMaps {
  ImageF saliency;
  ImageF luminance;
  ImageF local_contrast;
};

/// Euclidean distance (across channels) between the binomial-blurred input
/// and its per-channel global mean.
ImageF saliency_weight(const ImageF &input);

/// Root-mean-square deviation of R,G,B from their per-pixel mean.
ImageF luminance_weight(const ImageF &input);

/// Absolute response of the 1/8-scaled 3x3 Laplacian on the luminance.
ImageF local_contrast_weight(const ImageF &input);

WeightMaps compute_weight_maps(const ImageF &input);

/// Per-input product of the three maps, normalized across inputs so the
/// per-pixel sum is 1. Requires at least two inputs of equal dimensions.
std::vector<ImageF> normalize_weights(const std::vector<WeightMaps> &maps);

/// Multi-scale fusion: Gaussian pyramids of the weights against Laplacian
/// pyramids of the inputs, blended per level and collapsed. Unclamped.
ImageF fuse_multiscale_raw(const std::vector<ImageF> &inputs,
                           const std::vector<ImageF> &weights, int levels);

/// fuse_multiscale_raw followed by clamping into [0,1].
ImageF fuse_multiscale(const std::vector<ImageF> &inputs,
                       const std::vector<ImageF> &weights, int levels);

}  // namespace l2uwe
