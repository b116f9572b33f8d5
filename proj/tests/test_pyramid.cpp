#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "l2uwe/pyramid.hpp"
#include "oracles.hpp"

using namespace l2uwe;

namespace {

double round_trip_error(const ImageF &img, int levels) {
  const ImageF back = collapse_pyramid(build_laplacian_pyramid(img, levels));
  double err = 0.0;
  for (std::size_t i = 0; i < img.data.size(); ++i)
    err = std::max(err, std::fabs(static_cast<double>(back.data[i]) - img.data[i]));
  return err;
}

}  // namespace

TEST_SUITE("pyramid") {
  TEST_CASE("gaussian pyramid follows the halving schedule") {
    const Pyramid pyr = build_gaussian_pyramid(ImageF(64, 64, 3, 0.5f), 5);
    REQUIRE(pyr.levels.size() == 5);
    const int expected[5] = {64, 32, 16, 8, 4};
    for (int k = 0; k < 5; ++k) {
      CHECK(pyr.levels[k].width == expected[k]);
      CHECK(pyr.levels[k].height == expected[k]);
    }
  }

  TEST_CASE("single-level pyramid is just the input") {
    std::mt19937 rng(3);
    const ImageF img = oracle::random_image(rng, 10, 7);
    const Pyramid pyr = build_gaussian_pyramid(img, 1);
    REQUIRE(pyr.levels.size() == 1);
    CHECK(pyr.levels[0].data == img.data);

    const Pyramid lap = build_laplacian_pyramid(img, 1);
    CHECK(collapse_pyramid(lap).data == img.data);
  }

  TEST_CASE("constant image stays constant on every level") {
    const Pyramid pyr = build_gaussian_pyramid(ImageF(32, 24, 1, 0.37f), 4);
    for (const ImageF &level : pyr.levels)
      for (float v : level.data) CHECK(v == doctest::Approx(0.37).epsilon(1e-6));

    const Pyramid lap = build_laplacian_pyramid(ImageF(32, 24, 1, 0.37f), 4);
    for (std::size_t k = 0; k + 1 < lap.levels.size(); ++k)
      for (float v : lap.levels[k].data) CHECK(std::fabs(v) <= 1e-6);
    for (float v : lap.levels.back().data)
      CHECK(v == doctest::Approx(0.37).epsilon(1e-6));
  }

  TEST_CASE("laplacian round trip reconstructs the source") {
    std::mt19937 rng(17);
    CHECK(round_trip_error(oracle::random_image(rng, 32, 32), 3) <= 1e-4);
    CHECK(round_trip_error(oracle::random_image(rng, 64, 64), 5) <= 1e-4);
    CHECK(round_trip_error(oracle::random_image(rng, 37, 23), 3) <= 1e-4);  // odd sizes
    CHECK(round_trip_error(oracle::random_image(rng, 17, 61), 3) <= 1e-4);
  }

  TEST_CASE("collapse rejects gaussian pyramids") {
    const Pyramid pyr = build_gaussian_pyramid(ImageF(16, 16, 1, 0.1f), 2);
    CHECK_THROWS_AS(collapse_pyramid(pyr), std::invalid_argument);
  }

  TEST_CASE("depth beyond the image size is rejected") {
    CHECK_THROWS_AS(build_gaussian_pyramid(ImageF(8, 8, 1), 4), std::invalid_argument);
    CHECK_THROWS_AS(build_laplacian_pyramid(ImageF(8, 8, 1), 4), std::invalid_argument);
    CHECK_THROWS_AS(build_gaussian_pyramid(ImageF(8, 8, 1), 0), std::invalid_argument);
    CHECK_NOTHROW(build_gaussian_pyramid(ImageF(8, 8, 1), 3));
  }

  TEST_CASE("auto depth keeps the coarsest level at 8px or more") {
    CHECK(auto_pyramid_levels(128, 128, 5) == 5);
    CHECK(auto_pyramid_levels(64, 64, 5) == 4);
    CHECK(auto_pyramid_levels(64, 800, 5) == 4);  // short side rules
    CHECK(auto_pyramid_levels(16, 16, 5) == 2);
    CHECK(auto_pyramid_levels(7, 7, 5) == 1);
    CHECK(auto_pyramid_levels(1, 1, 5) == 1);
    CHECK(auto_pyramid_levels(512, 512, 2) == 2);  // request wins when shallow
  }

  TEST_CASE("upsample hits exact odd target sizes") {
    std::mt19937 rng(23);
    const ImageF img = oracle::random_image(rng, 9, 5, 1);
    const ImageF up = pyramid_upsample(img, 17, 9);
    CHECK(up.width == 17);
    CHECK(up.height == 9);
    // Grid alignment: coarse samples land on even coordinates.
    for (int y = 0; y < img.height; ++y)
      for (int x = 0; x < img.width; ++x)
        CHECK(up.at(2 * x, 2 * y) == img.at(x, y));
  }
}
