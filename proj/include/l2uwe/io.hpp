#pragma once

#include <string>

#include "l2uwe/image.hpp"

namespace l2uwe {

/// Decodes a PNG or JPEG file into a 3-channel [0,1] image.
/// Throws std::runtime_error when the file cannot be read or decoded.
ImageF load_image(const std::string &path);

/// Encodes a 1- or 3-channel image as 8-bit PNG, quantizing by
/// round-half-up of v*255.
void save_png(const ImageF &img, const std::string &path);

/// Lossless float dumps in PFM format (PF = color, Pf = gray).
ImageF load_pfm(const std::string &path);
void save_pfm(const ImageF &img, const std::string &path);

}  // namespace l2uwe
