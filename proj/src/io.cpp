#include "l2uwe/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace l2uwe {
namespace {

uint8_t quantize8(float v) {
  if (!(v > 0.0f)) return 0;
  double q = std::floor(static_cast<double>(v) * 255.0 + 0.5);
  return q > 255.0 ? 255 : static_cast<uint8_t>(q);
}

void swap_floats(std::vector<float> &v) {
  for (float &f : v) {
    uint32_t bits;
    std::memcpy(&bits, &f, 4);
    bits = ((bits & 0xff000000u) >> 24) | ((bits & 0x00ff0000u) >> 8) |
           ((bits & 0x0000ff00u) << 8) | ((bits & 0x000000ffu) << 24);
    std::memcpy(&f, &bits, 4);
  }
}

}  // namespace

ImageF load_image(const std::string &path) {
  cv::Mat bgr = cv::imread(path, cv::IMREAD_COLOR);
  if (bgr.empty())
    throw std::runtime_error("load_image: cannot decode " + path);

  ImageF img(bgr.cols, bgr.rows, 3);
  for (int y = 0; y < bgr.rows; ++y) {
    const cv::Vec3b *row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      img.at(x, y, 0) = row[x][2] / 255.0f;
      img.at(x, y, 1) = row[x][1] / 255.0f;
      img.at(x, y, 2) = row[x][0] / 255.0f;
    }
  }
  return img;
}

void save_png(const ImageF &img, const std::string &path) {
  if (img.channels != 1 && img.channels != 3)
    throw std::runtime_error("save_png: need 1 or 3 channels");

  cv::Mat mat;
  if (img.channels == 1) {
    mat.create(img.height, img.width, CV_8UC1);
    for (int y = 0; y < img.height; ++y) {
      uint8_t *row = mat.ptr<uint8_t>(y);
      for (int x = 0; x < img.width; ++x) row[x] = quantize8(img.at(x, y, 0));
    }
  } else {
    mat.create(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
      cv::Vec3b *row = mat.ptr<cv::Vec3b>(y);
      for (int x = 0; x < img.width; ++x) {
        row[x][0] = quantize8(img.at(x, y, 2));
        row[x][1] = quantize8(img.at(x, y, 1));
        row[x][2] = quantize8(img.at(x, y, 0));
      }
    }
  }
  if (!cv::imwrite(path, mat))
    throw std::runtime_error("save_png: cannot write " + path);
}

ImageF load_pfm(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_pfm: cannot open " + path);

  std::string magic;
  int width = 0;
  int height = 0;
  double scale = 0.0;
  in >> magic >> width >> height >> scale;
  if (!in || (magic != "PF" && magic != "Pf") || width < 1 || height < 1 ||
      scale == 0.0)
    throw std::runtime_error("load_pfm: bad header in " + path);
  in.get();  // single whitespace byte before the raster

  const int channels = magic == "PF" ? 3 : 1;
  std::vector<float> raster(static_cast<size_t>(width) * height * channels);
  in.read(reinterpret_cast<char *>(raster.data()),
          static_cast<std::streamsize>(raster.size() * sizeof(float)));
  if (!in) throw std::runtime_error("load_pfm: truncated raster in " + path);

  const bool file_little = scale < 0.0;
  if (file_little != (std::endian::native == std::endian::little))
    swap_floats(raster);

  ImageF img(width, height, channels);
  for (int y = 0; y < height; ++y) {
    const float *row =
        raster.data() + static_cast<size_t>(height - 1 - y) * width * channels;
    for (int x = 0; x < width; ++x)
      for (int c = 0; c < channels; ++c)
        img.at(x, y, c) = row[static_cast<size_t>(x) * channels + c];
  }
  return img;
}

void save_pfm(const ImageF &img, const std::string &path) {
  if (img.channels != 1 && img.channels != 3)
    throw std::runtime_error("save_pfm: need 1 or 3 channels");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_pfm: cannot open " + path);

  const double scale = std::endian::native == std::endian::little ? -1.0 : 1.0;
  out << (img.channels == 3 ? "PF" : "Pf") << "\n"
      << img.width << " " << img.height << "\n"
      << scale << "\n";

  std::vector<float> row(static_cast<size_t>(img.width) * img.channels);
  for (int y = img.height - 1; y >= 0; --y) {
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < img.channels; ++c)
        row[static_cast<size_t>(x) * img.channels + c] = img.at(x, y, c);
    out.write(reinterpret_cast<const char *>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(float)));
  }
  if (!out) throw std::runtime_error("save_pfm: write failed for " + path);
}

}  // namespace l2uwe
