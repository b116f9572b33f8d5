#pragma once

#include <vector>

#include "l2uwe/image.hpp"

namespace l2uwe {

/// Separable Gaussian blur, kernel radius ceil(3*sigma), replicate borders.
/// Rejects non-positive sigma.
ImageF gaussian_blur(const ImageF &img, double sigma);

/// Separable blur with the 5-tap binomial kernel [1 4 6 4 1]/16.
ImageF binomial5_blur(const ImageF &img);

/// Normalized 1-D Gaussian kernel of radius ceil(3*sigma).
std::vector<double> gaussian_kernel(double sigma);

/// Separable convolution with a symmetric odd-length kernel, replicate
/// borders, same output size.
ImageF separable_convolve(const ImageF &img, const std::vector<double> &kernel);

}  // namespace l2uwe
