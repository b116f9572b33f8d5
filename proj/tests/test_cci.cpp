#include <doctest.h>

#include <random>
#include <stdexcept>

#include "l2uwe/cci.hpp"
#include "oracles.hpp"

using namespace l2uwe;

namespace {

ImageF checkerboard(int w, int h) {
  ImageF img(w, h, 3);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < 3; ++c) img.at(x, y, c) = static_cast<float>((x + y) % 2);
  return img;
}

}  // namespace

TEST_SUITE("cci") {
  TEST_CASE("local_std of a constant image is zero") {
    // Exactly representable constant: all sums are exact, so the spread is
    // exactly zero. Values like 0.6 carry their own rounding and land a few
    // 1e-8 away instead.
    const ImageF img(10, 10, 3, 0.5f);
    for (int code = kMinCode; code <= kMaxCode; ++code)
      for (float v : local_std(img, code).data) CHECK(v == 0.0f);

    const ImageF rough(10, 10, 3, 0.6f);
    for (int code = kMinCode; code <= kMaxCode; ++code)
      for (float v : local_std(rough, code).data) CHECK(v <= 1e-6f);
  }

  TEST_CASE("local_std on a checkerboard matches direct enumeration") {
    const ImageF img = checkerboard(8, 8);
    const ImageF map = local_std(img, 1);
    for (int y = 0; y < 8; ++y)
      for (int x = 0; x < 8; ++x)
        CHECK(map.at(x, y) == static_cast<float>(oracle::local_std_at(img, x, y, 1)));
  }

  TEST_CASE("local_std equals the brute-force oracle bit for bit") {
    std::mt19937 rng(31);
    const ImageF img = oracle::random_image(rng, 16, 16);
    for (int code = kMinCode; code <= kMaxCode; ++code) {
      const ImageF fast = local_std(img, code);
      const ImageF naive = oracle::local_std(img, code);
      CHECK(fast.data == naive.data);
    }
  }

  TEST_CASE("local_std rejects out-of-range codes") {
    const ImageF img(4, 4, 3, 0.5f);
    CHECK_THROWS_AS(local_std(img, 0), std::invalid_argument);
    CHECK_THROWS_AS(local_std(img, 8), std::invalid_argument);
  }

  TEST_CASE("constant image takes the largest code everywhere") {
    const ContrastCodeImage cci = compute_cci(ImageF(9, 9, 3, 0.25f), 0.0);
    for (auto code : cci.codes) CHECK(code == kMaxCode);
  }

  TEST_CASE("compute_cci matches the argmin oracle, ties included") {
    std::mt19937 rng(37);
    const ImageF board = checkerboard(10, 10);
    const ContrastCodeImage a = compute_cci(board, 0.0);
    const ContrastCodeImage b = oracle::compute_cci(board, 0.0);
    CHECK(a.codes == b.codes);

    for (double tol : {0.0, 0.005, 0.02}) {
      const ImageF img = oracle::random_image(rng, 16, 16);
      CHECK(compute_cci(img, tol).codes == oracle::compute_cci(img, tol).codes);
    }
  }

  TEST_CASE("tolerance never shrinks the selected code") {
    std::mt19937 rng(41);
    const ImageF img = oracle::random_image(rng, 12, 12);
    const ContrastCodeImage base = compute_cci(img, 0.0);
    double prev_mean = 0.0;
    for (auto c : base.codes) prev_mean += c;
    prev_mean /= base.codes.size();

    ContrastCodeImage prev = base;
    for (double tol : {0.002, 0.01, 0.05}) {
      const ContrastCodeImage next = compute_cci(img, tol);
      for (std::size_t i = 0; i < next.codes.size(); ++i)
        CHECK(next.codes[i] >= prev.codes[i]);
      double mean = 0.0;
      for (auto c : next.codes) mean += c;
      mean /= next.codes.size();
      CHECK(mean >= prev_mean);
      prev_mean = mean;
      prev = next;
    }
  }

  TEST_CASE("negative tolerance is rejected") {
    CHECK_THROWS_AS(compute_cci(ImageF(4, 4, 3), -0.1), std::invalid_argument);
  }

  TEST_CASE("local_std is translation-equivariant away from borders") {
    std::mt19937 rng(43);
    const ImageF img = oracle::random_image(rng, 16, 16);
    ImageF shifted(16, 16, 3);
    for (int c = 0; c < 3; ++c)
      for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
          shifted.at(x, y, c) = img.at(clampi(x - 1, 0, 15), y, c);
    const ImageF a = local_std(img, 2);
    const ImageF b = local_std(shifted, 2);
    // Interior columns: window fully inside in both images.
    for (int y = 3; y < 13; ++y)
      for (int x = 4; x < 13; ++x) CHECK(b.at(x, y) == a.at(x - 1, y));
  }
}
