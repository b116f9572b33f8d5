#pragma once

#include <cstdint>
#include <vector>

#include "l2uwe/image.hpp"

namespace l2uwe {

inline constexpr int kMinCode = 1;
inline constexpr int kMaxCode = 7;

/// Patch side for a code: 3x3 (code 1) through 15x15 (code 7).
inline int patch_side(int code) { return 2 * code + 1; }

/// Per-pixel patch-size code in {1..7}, chosen where the local intensity
/// spread is smallest.
struct ContrastCodeImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> codes;

  ContrastCodeImage() = default;
  ContrastCodeImage(int w, int h, std::uint8_t fill = kMaxCode);

  std::uint8_t &at(int x, int y) { return codes[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return codes[static_cast<std::size_t>(y) * width + x]; }
};

/// Population standard deviation over all 3*(2i+1)^2 channel values in the
/// square patch of code i around each pixel, replicate borders.
ImageF local_std(const ImageF &img, int code);

/// Per-pixel argmin over codes of local_std minus tolerance*(code-1).
/// Ties break toward the larger code. tolerance >= 0.
ContrastCodeImage compute_cci(const ImageF &img, double tolerance);

}  // namespace l2uwe
