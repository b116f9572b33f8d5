#pragma once

#include <vector>

#include "l2uwe/image.hpp"

namespace l2uwe {

enum class PyramidKind { gaussian, laplacian };

/// Leveled image stack; level 0 is full resolution, each level halves the
/// previous one per axis (ceil division).
struct Pyramid {
  PyramidKind kind = PyramidKind::gaussian;
  std::vector<ImageF> levels;
};

/// Cap the requested depth so the coarsest level keeps >= 8 px on its short
/// side; always at least 1.
int auto_pyramid_levels(int width, int height, int requested);

/// Blur (sigma=1) then decimate even rows/columns. Output is ceil(w/2) x ceil(h/2).
ImageF pyramid_downsample(const ImageF &img);

/// Bilinear upsample aligned to the decimation grid (coarse pixel i maps to
/// fine pixel 2i); reaches the exact target size, including odd dimensions.
ImageF pyramid_upsample(const ImageF &img, int out_w, int out_h);

/// level 0 = img, level k+1 = downsample(level k). Rejects depths that would
/// shrink the short side below 2.
Pyramid build_gaussian_pyramid(const ImageF &img, int levels);

/// Band-pass detail levels plus the coarsest Gaussian level as residual.
Pyramid build_laplacian_pyramid(const ImageF &img, int levels);

/// Upsample-and-add from the residual back to full resolution. Laplacian
/// pyramids only; the result is not clamped.
ImageF collapse_pyramid(const Pyramid &pyr);

}  // namespace l2uwe
