#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "btevo/vision/camera.hpp"
#include "btevo/vision/detector.hpp"
#include "btevo/vision/features.hpp"
#include "btevo/vision/integral_image.hpp"
#include "btevo/vision/pgm.hpp"
#include "btevo/vision/pipeline.hpp"
#include "btevo/vision/render.hpp"
#include "btevo/sim/dynamics.hpp"

using namespace btevo::vision;
using btevo::sim::RoomConfig;

namespace {

template <typename T>
Image<T> random_image(std::mt19937_64& rng, std::size_t w, std::size_t h, T hi) {
  Image<T> img(w, h);
  std::uniform_int_distribution<long long> d(0, static_cast<long long>(hi));
  for (auto& p : img.pixels()) p = static_cast<T>(d(rng));
  return img;
}

template <typename T>
T brute_sum(const Image<T>& img, std::size_t x, std::size_t y, std::size_t w, std::size_t h) {
  T s{};
  for (std::size_t j = y; j < y + h; ++j)
    for (std::size_t i = x; i < x + w; ++i) s += img(i, j);
  return s;
}

DisparityMap block_map(std::size_t bx, std::size_t by, std::size_t side, double inside, double outside) {
  DisparityMap d(128, 96, outside);
  for (std::size_t y = by; y < by + side; ++y)
    for (std::size_t x = bx; x < bx + side; ++x) d(x, y) = inside;
  return d;
}

const double kPi = std::numbers::pi;

}  // namespace

TEST(IntegralImage, TwoByTwo) {
  const Image<int> img(2, 2, std::vector<int>{1, 2, 3, 4});
  const IntegralImage<long long> ii(img);
  EXPECT_EQ(ii.total(), 10);
  EXPECT_EQ(ii.at(2, 2), 10);
  EXPECT_EQ(ii.at(0, 2), 0);
  EXPECT_EQ(ii.at(1, 1), 1);
  EXPECT_EQ(ii.rect_sum(1, 1, 1, 1), 4);
  EXPECT_EQ(ii.rect_sum(0, 0, 2, 2), 10);
  EXPECT_EQ(ii.rect_sum(1, 0, 1, 2), 6);
}

TEST(IntegralImage, AllZero) {
  const IntegralImage<long long> ii(Image<int>(7, 5, 0));
  for (std::size_t y = 0; y <= 5; ++y)
    for (std::size_t x = 0; x <= 7; ++x) EXPECT_EQ(ii.at(x, y), 0);
}

TEST(IntegralImage, EveryEntryMatchesBruteForcePrefix) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    const auto img = random_image<long long>(rng, 16, 12, 1000);
    const IntegralImage<long long> ii(img);
    ASSERT_EQ(ii.total(), brute_sum(img, 0, 0, 16, 12));
    for (std::size_t y = 0; y <= 12; ++y)
      for (std::size_t x = 0; x <= 16; ++x) ASSERT_EQ(ii.at(x, y), brute_sum(img, 0, 0, x, y));
  }
}

TEST(IntegralImage, RandomRectanglesMatchBruteForce) {
  std::mt19937_64 rng(2);
  const auto img = random_image<long long>(rng, 37, 23, 255);
  const IntegralImage<long long> ii(img);
  for (int n = 0; n < 200; ++n) {
    const auto x = std::uniform_int_distribution<std::size_t>(0, 36)(rng);
    const auto y = std::uniform_int_distribution<std::size_t>(0, 22)(rng);
    const auto w = std::uniform_int_distribution<std::size_t>(0, 37 - x)(rng);
    const auto h = std::uniform_int_distribution<std::size_t>(0, 23 - y)(rng);
    ASSERT_EQ(ii.rect_sum(x, y, w, h), brute_sum(img, x, y, w, h));
  }
}

TEST(IntegralImage, OutOfBoundsRectangleThrows) {
  const IntegralImage<long long> ii(Image<int>(4, 3, 1));
  EXPECT_THROW(ii.rect_sum(3, 0, 2, 1), std::out_of_range);
  EXPECT_THROW(ii.rect_sum(0, 2, 1, 2), std::out_of_range);
  EXPECT_THROW(ii.at(5, 0), std::out_of_range);
  EXPECT_NO_THROW(ii.rect_sum(0, 0, 4, 3));
}

TEST(IntegralImage, DoubleTableIsExactForIntegerPixels) {
  std::mt19937_64 rng(3);
  const auto img = random_image<double>(rng, 128, 96, 4095);
  const IntegralImage<double> ii(img);
  for (int n = 0; n < 100; ++n) {
    const auto x = std::uniform_int_distribution<std::size_t>(0, 127)(rng);
    const auto y = std::uniform_int_distribution<std::size_t>(0, 95)(rng);
    const auto w = std::uniform_int_distribution<std::size_t>(0, 128 - x)(rng);
    const auto h = std::uniform_int_distribution<std::size_t>(0, 96 - y)(rng);
    ASSERT_EQ(ii.rect_sum(x, y, w, h), brute_sum(img, x, y, w, h));
  }
}

TEST(Camera, FocalLengths) {
  const CameraModel cam;
  EXPECT_NEAR(cam.fx(), 64.0 / std::tan(kPi / 6.0), 1e-12);
  EXPECT_NEAR(cam.fx(), 110.851, 1e-3);
  EXPECT_NEAR(cam.fy(), 48.0 / std::tan(kPi / 8.0), 1e-12);
  EXPECT_EQ(cam.u(0), -63.5);
  EXPECT_EQ(cam.u(127), 63.5);
  EXPECT_EQ(cam.v(0), -47.5);
}

TEST(Disparity, InverseDepth) {
  const DepthImage depth(3, 1, std::vector<double>{1.0, 2.0, 1e12});
  const auto d = to_disparity(depth);
  EXPECT_NEAR(d(0, 0), 6.651, 5e-4);
  EXPECT_NEAR(d(0, 0), 110.85125168440814 * 0.06, 1e-9);
  EXPECT_DOUBLE_EQ(d(1, 0), 0.5 * d(0, 0));
  EXPECT_LT(d(2, 0), 1e-9);
  EXPECT_GT(d(2, 0), 0.0);
}

TEST(Render, PerpendicularRayToFacingWall) {
  const RoomConfig room;
  EXPECT_NEAR(cast_ray(room, 4.0, 4.0, 1.5, 1.0, 0.0, 0.0), 4.0, 1e-6);
  EXPECT_NEAR(cast_ray(room, 5.0, 2.0, 1.5, 0.0, -1.0, 0.0), 2.0, 1e-6);
  EXPECT_NEAR(cast_ray(room, 4.0, 4.0, 1.5, 0.0, 0.0, 1.0), 1.5, 1e-6);
}

// Facing the blank east wall from the room centre, every pixel hits the wall
// plane x = 8, the floor or the ceiling.
TEST(Render, MatchesPlaneIntersectionOracle) {
  const RoomConfig room;
  const CameraModel cam;
  const auto depth = render_depth({4.0, 4.0, 1.5, 0.0}, room, cam);
  for (std::size_t row = 0; row < cam.height; ++row) {
    for (std::size_t col = 0; col < cam.width; ++col) {
      const double a = cam.u(col) / cam.fx();   // rightwards per metre forward
      const double b = -cam.v(row) / cam.fy();  // upwards per metre forward
      const double norm = std::sqrt(1.0 + a * a + b * b);
      double t = 4.0;                               // forward distance to the wall
      if (b > 0) t = std::min(t, 1.5 / b);          // ceiling at 3 m
      if (b < 0) t = std::min(t, 1.5 / -b);         // floor
      ASSERT_NEAR(depth(col, row), t * norm, 1e-9) << col << "," << row;
    }
  }
  // The central 2x2 block straddles the optical axis.
  const double centre = 4.0 * std::sqrt(1.0 + std::pow(0.5 / cam.fx(), 2) + std::pow(0.5 / cam.fy(), 2));
  EXPECT_NEAR(depth(63, 47), centre, 1e-9);
  EXPECT_NEAR(depth(64, 48), centre, 1e-9);
}

TEST(Render, WindowRevealsBackRoom) {
  const RoomConfig room;
  const CameraModel cam;
  const auto depth = render_depth({4.0, 4.0, 1.5, kPi / 2}, room, cam);
  const double through = 12.0 * std::sqrt(1.0 + std::pow(0.5 / cam.fx(), 2) + std::pow(0.5 / cam.fy(), 2));
  EXPECT_NEAR(depth(63, 47), through, 1e-9);
  EXPECT_GT(depth(64, 48), 4.0);
  EXPECT_NEAR(cast_ray(room, 4.0, 4.0, 1.5, 0.0, 1.0, 0.0), 12.0, 1e-9);
  // Just beside the opening the ray stops at the wall.
  EXPECT_NEAR(cast_ray(room, 3.5, 4.0, 1.5, 0.0, 1.0, 0.0), 4.0, 1e-9);
  // Over the top of the opening as well.
  EXPECT_NEAR(cast_ray(room, 4.0, 4.0, 1.95, 0.0, 1.0, 0.0), 4.0, 1e-9);
}

TEST(Render, MirrorSymmetricWhenSquareOnToWallCentre) {
  const RoomConfig room;
  for (double heading : {0.0, kPi / 2, kPi, -kPi / 2}) {
    const auto depth = render_depth({4.0, 4.0, 1.5, heading}, room);
    for (std::size_t row = 0; row < depth.height(); ++row)
      for (std::size_t col = 0; col < depth.width() / 2; ++col)
        ASSERT_NEAR(depth(col, row), depth(depth.width() - 1 - col, row), 1e-9);
  }
}

TEST(Render, DepthsPositiveAndFiniteEverywhere) {
  const RoomConfig room;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> pos(0.3, 7.7), head(-kPi, kPi);
  for (int n = 0; n < 50; ++n) {
    const auto depth = render_depth({pos(rng), pos(rng), 1.5, head(rng)}, room);
    for (double d : depth.pixels()) ASSERT_TRUE(std::isfinite(d) && d > 0.0);
  }
}

TEST(Detector, PerfectWindowBlock) {
  const auto d = block_map(48, 40, 16, 0.0, 5.0);
  const auto det = detect_window(d);
  EXPECT_EQ(det.sigma, 0.0);
  EXPECT_EQ(det.rect, (PixelRect{48, 40, 16, 16}));
  EXPECT_DOUBLE_EQ(det.x, (48.0 + 8.0 - 64.0) / 64.0);
}

TEST(Detector, UniformMapHasNoEvidence) {
  const auto det = detect_window(DisparityMap(128, 96, 3.0));
  EXPECT_NEAR(det.sigma, 100.0, 1e-4);
  EXPECT_LE(det.sigma, 100.0);
}

TEST(Detector, ScoreIsRatioOfMeans) {
  // Block at half the ring's disparity.
  const auto det = detect_window(block_map(40, 32, 32, 2.0, 4.0));
  EXPECT_EQ(det.rect, (PixelRect{40, 32, 32, 32}));
  EXPECT_NEAR(det.sigma, 100.0 * 2.0 / (4.0 + 1e-6), 1e-9);
}

TEST(Detector, TranslatingBlockByStridesMovesDetection) {
  for (std::size_t k = 0; k < 8; ++k) {
    const auto det = detect_window(block_map(20 + 4 * k, 36, 24, 0.5, 6.0));
    EXPECT_EQ(det.rect.x, 20 + 4 * k);
    EXPECT_EQ(det.rect.y, 36u);
    const auto down = detect_window(block_map(40, 8 + 4 * k, 24, 0.5, 6.0));
    EXPECT_EQ(down.rect.y, 8 + 4 * k);
  }
}

TEST(Detector, MirroredMapNegatesX) {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 20; ++n) {
    const auto bx = std::uniform_int_distribution<std::size_t>(0, 26)(rng) * 4;
    const auto by = std::uniform_int_distribution<std::size_t>(0, 19)(rng) * 4;
    auto d = block_map(bx, by, 16, 1.0, 4.0);
    for (auto& p : d.pixels()) p += std::uniform_real_distribution<double>(0.0, 0.01)(rng);
    DisparityMap m(128, 96);
    for (std::size_t y = 0; y < 96; ++y)
      for (std::size_t x = 0; x < 128; ++x) m(127 - x, y) = d(x, y);
    const auto a = detect_window(d);
    const auto b = detect_window(m);
    EXPECT_DOUBLE_EQ(a.x, -b.x);
    EXPECT_NEAR(a.sigma, b.sigma, 1e-9);
  }
}

TEST(Detector, FindsRealWindowFromFourMetres) {
  const RoomConfig room;
  const CameraModel cam;
  // (camera x, heading) pairs; camera at y = 4, window centre at (4, 8).
  for (auto [cx, heading] : {std::pair{4.0, kPi / 2}, {3.0, kPi / 2}, {5.0, kPi / 2}, {4.0, kPi / 2 + 0.2}}) {
    const double dx = 4.0 - cx, dy = 4.0;
    // Bearing of the window centre, clockwise from the optical axis.
    const double bearing = heading - std::atan2(dy, dx);
    const double expected = cam.fx() * std::tan(bearing) / 64.0;
    const auto disparity = to_disparity(render_depth({cx, 4.0, 1.5, heading}, room, cam), cam);
    const auto det = detect_window(disparity);
    EXPECT_NEAR(det.x, expected, 0.1) << cx << " " << heading;
    EXPECT_LT(det.sigma, 50.0);
  }
}

TEST(Features, UniformSaturatedMap) {
  const CameraModel cam;
  const DisparityMap d(128, 96, saturation_disparity(cam));
  const auto f = extract_features(d, detect_window(d), cam);
  EXPECT_NEAR(f.Sigma, 1.0, 1e-12);
  EXPECT_NEAR(f.Delta, 0.0, 1e-12);
  EXPECT_NEAR(saturation_disparity(cam), cam.fx() * 0.06 / 0.25, 1e-12);
}

TEST(Features, AllDisparityOnTheLeft) {
  DisparityMap d(128, 96, 0.0);
  for (std::size_t y = 0; y < 96; ++y)
    for (std::size_t x = 0; x < 64; ++x) d(x, y) = 3.0;
  const auto f = extract_features(d, detect_window(d));
  EXPECT_NEAR(f.Delta, 1.0, 1e-9);
  for (auto& p : d.pixels()) p = p > 0 ? 0.0 : 3.0;
  EXPECT_NEAR(extract_features(d, detect_window(d)).Delta, -1.0, 1e-9);
}

// Sigma for a blank wall 4 m ahead, from the analytic integral of disparity
// over the image plane. With a = u/fx, b = v/fy the ray hits the wall at
// depth 4 sqrt(1+a^2+b^2), or the floor/ceiling (1.5 m away) when |b| > 0.375.
TEST(Features, SigmaMatchesAnalyticIntegral) {
  const CameraModel cam;
  const double A = std::tan(kPi / 6), B = std::tan(kPi / 8), bc = 1.5 / 4.0;
  // Integral of 1/sqrt(1+a^2+b^2) over [0,a] x [0,b].
  auto F = [](double a, double b) {
    return a * std::asinh(b / std::sqrt(1 + a * a)) + b * std::asinh(a / std::sqrt(1 + b * b)) -
           std::atan(a * b / std::sqrt(1 + a * a + b * b));
  };
  // Integral of sqrt(1+a^2+c^2) over a in [0, a].
  auto G = [](double a, double c) {
    const double k2 = 1 + c * c;
    return 0.5 * a * std::sqrt(a * a + k2) + 0.5 * k2 * std::asinh(a / std::sqrt(k2));
  };
  // One quadrant; the other three are mirror images.
  const double wall = F(A, bc) / 4.0;
  // Over the band bc < b < B: |b| / (1.5 sqrt(1+a^2+b^2)) integrates in b to
  // (sqrt(1+a^2+B^2) - sqrt(1+a^2+bc^2)) / 1.5.
  const double band = (G(A, B) - G(A, bc)) / 1.5;
  const double mean_inverse_depth = (wall + band) / (A * B);
  const double expected = cam.disparity_gain() * mean_inverse_depth / saturation_disparity(cam);

  const RoomConfig room;
  const auto d = to_disparity(render_depth({4.0, 4.0, 1.5, 0.0}, room, cam), cam);
  const auto f = extract_features(d, detect_window(d), cam);
  EXPECT_NEAR(f.Sigma, expected, 0.02 * expected);
  EXPECT_NEAR(f.Sigma, expected, 0.002 * expected);
}

TEST(Features, SigmaRisesWhenApproachingWall) {
  const RoomConfig room;
  VisionPipeline pipeline;
  double previous = -1.0;
  for (double x = 1.0; x < 7.6; x += 0.05) {
    const auto f = pipeline.sense({x, 3.0, 1.5, 0.0}, room);
    ASSERT_GT(f.Sigma, previous) << x;
    previous = f.Sigma;
  }
}

TEST(Features, MirroredSceneNegatesXAndDelta) {
  const RoomConfig room;
  VisionPipeline pipeline;
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> pos(0.6, 7.4), head(-kPi, kPi);
  // Random poses avoid exactly symmetric views, where mirror-image
  // candidates would tie and scan order would pick the left one.
  int checked = 0;
  for (int n = 0; n < 40; ++n) {
    const double x = pos(rng), y = pos(rng), h = head(rng);
    const auto a = pipeline.sense({x, y, 1.5, h}, room);
    // Reflect about the plane x = 4, which also maps the room and window onto themselves.
    const auto b = pipeline.sense({8.0 - x, y, 1.5, btevo::sim::wrap_angle(kPi - h)}, room);
    EXPECT_NEAR(a.Sigma, b.Sigma, 1e-9);
    EXPECT_NEAR(a.Delta, -b.Delta, 1e-9);
    EXPECT_NEAR(a.sigma, b.sigma, 1e-9);
    if (std::abs(a.x + b.x) < 1e-12) ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(Pgm, WritesPlainGreyMap) {
  const auto path = std::filesystem::temp_directory_path() / "btevo_test.pgm";
  write_pgm(path, Image<double>(3, 2, std::vector<double>{0.0, 1.24, 2.5, 70000.0, -1.0, 0.05}), 10.0);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), "P2\n3 2\n65535\n0 12 25\n65535 0 1\n");
  std::filesystem::remove(path);
}
