#pragma once

#include <optional>

#include "l2uwe/image.hpp"

namespace l2uwe {

/// Global contrast factor: weighted sum of mean local contrasts over a series
/// of halved resolutions of the gamma-mapped luminance.
double gcf(const ImageF &img);

struct EdgeScores {
  std::optional<double> e;  // visible-edge count increase; absent when the
                            // original has no visible edges
  double r = 1.0;           // geometric mean gradient ratio on visible edges
};

/// Visible-edge e-score and visibility r-score of `enhanced` against
/// `original`. Edges are Sobel gradient magnitudes above 0.1.
EdgeScores e_r_scores(const ImageF &original, const ImageF &enhanced);

/// Mean of the luminance over all pixels.
double mean_luminance(const ImageF &img);

struct MetricsReport {
  double gcf = 0.0;  // of the enhanced image
  std::optional<double> e_score;
  double r_score = 1.0;
  double mean_luminance_in = 0.0;
  double mean_luminance_out = 0.0;
};

MetricsReport compute_metrics(const ImageF &original, const ImageF &enhanced);

}  // namespace l2uwe
