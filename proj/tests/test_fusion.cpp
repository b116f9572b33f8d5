#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "l2uwe/fusion.hpp"
#include "oracles.hpp"

using namespace l2uwe;

namespace {

ImageF random_weight(std::mt19937 &rng, int w, int h) {
  return oracle::random_image(rng, w, h, 1);
}

}  // namespace

TEST_SUITE("fusion") {
  TEST_CASE("saliency weight is zero on constants and peaks at a blob") {
    for (float v : saliency_weight(ImageF(12, 12, 3, 0.5f)).data)
      CHECK(std::fabs(v) <= 1e-7);

    ImageF img(21, 21, 3, 0.4f);
    for (int c = 0; c < 3; ++c)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) img.at(10 + dx, 10 + dy, c) = 1.0f;
    const ImageF w = saliency_weight(img);
    float best = -1.0f;
    int bx = -1, by = -1;
    for (int y = 0; y < 21; ++y)
      for (int x = 0; x < 21; ++x)
        if (w.at(x, y) > best) {
          best = w.at(x, y);
          bx = x;
          by = y;
        }
    CHECK(bx == 10);
    CHECK(by == 10);
  }

  TEST_CASE("saliency weight matches the direct formula") {
    std::mt19937 rng(3);
    const ImageF img = oracle::random_image(rng, 16, 16);
    const ImageF w = saliency_weight(img);

    // Direct 2-D evaluation: 5x5 binomial blur, per-channel mean, norm.
    const double k1[5] = {1 / 16.0, 4 / 16.0, 6 / 16.0, 4 / 16.0, 1 / 16.0};
    std::vector<double> mean(3, 0.0);
    for (int c = 0; c < 3; ++c) {
      for (std::size_t i = 0; i < img.plane_size(); ++i) mean[c] += img.plane(c)[i];
      mean[c] /= static_cast<double>(img.plane_size());
    }
    for (int y = 0; y < 16; ++y)
      for (int x = 0; x < 16; ++x) {
        double acc = 0.0;
        for (int c = 0; c < 3; ++c) {
          double blur = 0.0;
          for (int dy = -2; dy <= 2; ++dy)
            for (int dx = -2; dx <= 2; ++dx)
              blur += k1[dy + 2] * k1[dx + 2] *
                      img.at(clampi(x + dx, 0, 15), clampi(y + dy, 0, 15), c);
          const double d = blur - mean[c];
          acc += d * d;
        }
        CHECK(std::fabs(w.at(x, y) - std::sqrt(acc)) <= 1e-6);
      }
  }

  TEST_CASE("luminance weight follows the per-pixel deviation formula") {
    for (float v : luminance_weight(ImageF(5, 5, 3, 0.77f)).data) CHECK(v == 0.0f);

    ImageF red(1, 1, 3, 0.0f);
    red.at(0, 0, 0) = 1.0f;
    CHECK(luminance_weight(red).at(0, 0) ==
          doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-7));

    std::mt19937 rng(7);
    const ImageF img = oracle::random_image(rng, 9, 9);
    const ImageF w = luminance_weight(img);
    for (int y = 0; y < 9; ++y)
      for (int x = 0; x < 9; ++x) {
        const double r = img.at(x, y, 0), g = img.at(x, y, 1), b = img.at(x, y, 2);
        const double lum = (r + g + b) / 3.0;
        const double expect = std::sqrt(
            ((r - lum) * (r - lum) + (g - lum) * (g - lum) + (b - lum) * (b - lum)) / 3.0);
        CHECK(std::fabs(w.at(x, y) - expect) <= 1e-7);
      }
  }

  TEST_CASE("local contrast weight reads out the scaled laplacian") {
    for (float v : local_contrast_weight(ImageF(7, 7, 3, 0.2f)).data) CHECK(v == 0.0f);

    ImageF ramp(16, 16, 3);
    for (int c = 0; c < 3; ++c)
      for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) ramp.at(x, y, c) = x / 16.0f;
    const ImageF wr = local_contrast_weight(ramp);
    for (int y = 1; y < 15; ++y)
      for (int x = 1; x < 15; ++x) CHECK(wr.at(x, y) == 0.0f);

    ImageF impulse(9, 9, 3, 0.0f);
    for (int c = 0; c < 3; ++c) impulse.at(4, 4, c) = 1.0f;
    const ImageF wi = local_contrast_weight(impulse);
    CHECK(wi.at(4, 4) == 1.0f);
    CHECK(wi.at(3, 4) == 0.125f);
    CHECK(wi.at(3, 3) == 0.125f);
    CHECK(wi.at(2, 4) == 0.0f);
  }

  TEST_CASE("normalization splits evenly on identical inputs") {
    std::mt19937 rng(11);
    const ImageF img = oracle::random_image(rng, 8, 8);
    const WeightMaps maps = compute_weight_maps(img);
    const auto norm = normalize_weights({maps, maps});
    REQUIRE(norm.size() == 2);
    for (std::size_t i = 0; i < norm[0].data.size(); ++i) {
      CHECK(norm[0].data[i] == doctest::Approx(0.5).epsilon(1e-6));
      CHECK(norm[1].data[i] == doctest::Approx(0.5).epsilon(1e-6));
    }
  }

  TEST_CASE("an all-zero product weight loses to a positive one") {
    WeightMaps strong{ImageF(6, 6, 1, 0.5f), ImageF(6, 6, 1, 0.5f), ImageF(6, 6, 1, 0.5f)};
    WeightMaps zero{ImageF(6, 6, 1, 0.0f), ImageF(6, 6, 1, 0.5f), ImageF(6, 6, 1, 0.5f)};
    const auto norm = normalize_weights({strong, zero});
    for (std::size_t i = 0; i < norm[0].data.size(); ++i) {
      CHECK(norm[0].data[i] >= 0.999f);
      CHECK(norm[1].data[i] <= 0.001f);
    }
  }

  TEST_CASE("normalized weights are a partition of unity") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<WeightMaps> maps;
      for (int k = 0; k < 2 + trial; ++k)
        maps.push_back(WeightMaps{random_weight(rng, 11, 7), random_weight(rng, 11, 7),
                                  random_weight(rng, 11, 7)});
      const auto norm = normalize_weights(maps);
      for (std::size_t i = 0; i < norm[0].data.size(); ++i) {
        double sum = 0.0;
        for (const ImageF &w : norm) {
          CHECK(w.data[i] >= 0.0f);
          sum += w.data[i];
        }
        CHECK(std::fabs(sum - 1.0) <= 1e-6);
      }
    }
  }

  TEST_CASE("normalization validates its inputs") {
    const WeightMaps maps{ImageF(4, 4, 1), ImageF(4, 4, 1), ImageF(4, 4, 1)};
    CHECK_THROWS_AS(normalize_weights({maps}), std::invalid_argument);
    const WeightMaps off{ImageF(5, 4, 1), ImageF(4, 4, 1), ImageF(4, 4, 1)};
    CHECK_THROWS_AS(normalize_weights({maps, off}), std::invalid_argument);
  }

  TEST_CASE("fusing identical inputs reproduces the input") {
    std::mt19937 rng(17);
    const ImageF img = oracle::random_image(rng, 32, 32);
    const WeightMaps maps = compute_weight_maps(img);
    const auto norm = normalize_weights({maps, maps});
    const ImageF out = fuse_multiscale({img, img}, norm, 3);
    for (std::size_t i = 0; i < img.data.size(); ++i)
      CHECK(std::fabs(out.data[i] - img.data[i]) <= 1e-3);
  }

  TEST_CASE("degenerate one-hot weights select one input") {
    std::mt19937 rng(19);
    const ImageF a = oracle::random_image(rng, 32, 32);
    const ImageF b = oracle::random_image(rng, 32, 32);
    const ImageF one(32, 32, 1, 1.0f);
    const ImageF zero(32, 32, 1, 0.0f);
    const ImageF out = fuse_multiscale({a, b}, {one, zero}, 3);
    for (std::size_t i = 0; i < a.data.size(); ++i)
      CHECK(std::fabs(out.data[i] - a.data[i]) <= 1e-3);
  }

  TEST_CASE("single-level fusion is the exact weighted average") {
    std::mt19937 rng(23);
    const ImageF a = oracle::random_image(rng, 9, 6);
    const ImageF b = oracle::random_image(rng, 9, 6);
    const ImageF wa = random_weight(rng, 9, 6);
    ImageF wb = wa;
    for (float &v : wb.data) v = 1.0f - v;  // dyadic complement, sums to 1 exactly

    const ImageF out = fuse_multiscale_raw({a, b}, {wa, wb}, 1);
    for (int c = 0; c < 3; ++c)
      for (int y = 0; y < 6; ++y)
        for (int x = 0; x < 9; ++x) {
          const double expect = static_cast<double>(wa.at(x, y)) * a.at(x, y, c) +
                                static_cast<double>(wb.at(x, y)) * b.at(x, y, c);
          CHECK(out.at(x, y, c) == static_cast<float>(expect));
        }
  }

  TEST_CASE("single-level fusion stays inside the convex hull") {
    std::mt19937 rng(29);
    const ImageF a = oracle::random_image(rng, 8, 8);
    const ImageF b = oracle::random_image(rng, 8, 8);
    const ImageF wa = random_weight(rng, 8, 8);
    ImageF wb = wa;
    for (float &v : wb.data) v = 1.0f - v;
    const ImageF out = fuse_multiscale_raw({a, b}, {wa, wb}, 1);
    for (int c = 0; c < 3; ++c)
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) {
          CHECK(out.at(x, y, c) >= std::min(a.at(x, y, c), b.at(x, y, c)));
          CHECK(out.at(x, y, c) <= std::max(a.at(x, y, c), b.at(x, y, c)));
        }
  }

  TEST_CASE("fusion validates shapes") {
    const ImageF a(8, 8, 3, 0.5f);
    const ImageF w(8, 8, 1, 0.5f);
    CHECK_THROWS_AS(fuse_multiscale({a}, {w, w}, 1), std::invalid_argument);
    CHECK_THROWS_AS(fuse_multiscale({a, ImageF(7, 8, 3)}, {w, w}, 1), std::invalid_argument);
    CHECK_THROWS_AS(fuse_multiscale({a, a}, {w, ImageF(8, 8, 3)}, 1), std::invalid_argument);
  }
}
