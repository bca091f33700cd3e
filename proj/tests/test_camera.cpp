#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"

#include "agme/camera.hpp"
#include "agme/environments.hpp"
#include "agme/rng.hpp"

using namespace agme;

namespace {

int colored_pixels(const Image& img, const Rgb& background = kWhite) {
  int count = 0;
  for (int row = 0; row < kImageSize; ++row) {
    for (int col = 0; col < kImageSize; ++col) {
      const Rgb px{img.at(row, col, 0), img.at(row, col, 1),
                   img.at(row, col, 2)};
      if (!(px == background)) ++count;
    }
  }
  return count;
}

std::set<std::pair<int, int>> support(const Image& img,
                                      const Rgb& background = kWhite) {
  std::set<std::pair<int, int>> pixels;
  for (int row = 0; row < kImageSize; ++row) {
    for (int col = 0; col < kImageSize; ++col) {
      const Rgb px{img.at(row, col, 0), img.at(row, col, 1),
                   img.at(row, col, 2)};
      if (!(px == background)) pixels.insert({row, col});
    }
  }
  return pixels;
}

// independent pixel-center containment count for a disk
int disk_pixel_oracle(Vec2 center, double radius) {
  int count = 0;
  for (int row = 0; row < kImageSize; ++row) {
    for (int col = 0; col < kImageSize; ++col) {
      const double px = (col + 0.5) / kPixelsPerUnit;
      const double py = (row + 0.5) / kPixelsPerUnit;
      const double dx = px - center.x;
      const double dy = py - center.y;
      if (std::sqrt(dx * dx + dy * dy) <= radius) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("clear fills every channel") {
  Image img;
  img.clear(kWhite);
  for (double v : img.flat()) CHECK(v == 1.0);
  img.clear(kBlack);
  for (double v : img.flat()) CHECK(v == 0.0);
  img.clear(kRed);
  const SensorVector& flat = img.flat();
  REQUIRE(flat.size() == 7500);
  for (std::size_t i = 0; i < flat.size(); i += 3) {
    CHECK(flat[i] == 1.0);
    CHECK(flat[i + 1] == 0.0);
    CHECK(flat[i + 2] == 0.0);
  }
}

TEST_CASE("hue wheel reference colors") {
  CHECK(hue_to_rgb(0.0) == kRed);
  CHECK(hue_to_rgb(1.0 / 3.0) == Rgb{0.0, 1.0, 0.0});
  CHECK(hue_to_rgb(0.5) == Rgb{0.0, 1.0, 1.0});
  const Rgb violet = hue_to_rgb(0.75);
  CHECK(violet.r == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(violet.g == 0.0);
  CHECK(violet.b == 1.0);
  // wrapping
  CHECK(hue_to_rgb(1.25) == hue_to_rgb(0.25));
  CHECK(hue_to_rgb(-0.25) == hue_to_rgb(0.75));
}

TEST_CASE("centered disk covers the expected pixel count") {
  Image img(kWhite);
  img.draw_disk({0.5, 0.5}, 0.1, kRed);
  const int count = colored_pixels(img);
  CHECK(count == disk_pixel_oracle({0.5, 0.5}, 0.1));
  CHECK(count >= 69);
  CHECK(count <= 89);
}

TEST_CASE("tiny disk at a pixel center colors exactly one pixel") {
  Image img(kWhite);
  // pixel (25, 25) has its center at (25.5 px, 25.5 px) = (0.51, 0.51)
  img.draw_disk({0.51, 0.51}, 0.005, kRed);
  CHECK(colored_pixels(img) == 1);
  CHECK(img.at(25, 25, 0) == 1.0);
  CHECK(img.at(25, 25, 1) == 0.0);
}

TEST_CASE("disk at the corner clips to the in-bounds quadrant") {
  Image img(kWhite);
  img.draw_disk({0.0, 0.0}, 0.1, kRed);
  CHECK(colored_pixels(img) == disk_pixel_oracle({0.0, 0.0}, 0.1));
  for (const auto& [row, col] : support(img)) {
    CHECK(row <= 5);
    CHECK(col <= 5);
  }
}

TEST_CASE("horizontal segment band matches the capsule oracle") {
  Image img(kWhite);
  img.draw_segment({0.0, 0.5}, {1.0, 0.5}, 2.0, kBlue);
  int oracle = 0;
  for (int row = 0; row < kImageSize; ++row) {
    for (int col = 0; col < kImageSize; ++col) {
      const Vec2 pc{col + 0.5, row + 0.5};
      const Vec2 a{0.0, 25.0};
      const Vec2 b{50.0, 25.0};
      if (point_segment_distance(pc, a, b) <= 1.0) ++oracle;
    }
  }
  CHECK(colored_pixels(img) == oracle);
  // a full-width band of height 2 around y = 25 px
  CHECK(oracle == 2 * kImageSize);
}

TEST_CASE("zero-length segment draws a disk of the same diameter") {
  Image as_segment(kWhite);
  as_segment.draw_segment({0.5, 0.5}, {0.5, 0.5}, 4.0, kRed);
  Image as_disk(kWhite);
  as_disk.draw_disk({0.5, 0.5}, 2.0 / kPixelsPerUnit, kRed);
  CHECK(as_segment == as_disk);
}

TEST_CASE("drawing is idempotent") {
  Image once(kWhite);
  once.draw_segment({0.2, 0.3}, {0.9, 0.8}, 2.0, kBlue);
  Image twice = once;
  twice.draw_segment({0.2, 0.3}, {0.9, 0.8}, 2.0, kBlue);
  CHECK(once == twice);
}

TEST_CASE("flatten round-trips and indexes as documented") {
  Image img(kWhite);
  img.at(7, 31, 2) = 0.25;
  const SensorVector& flat = img.flat();
  CHECK(flat[(7 * 50 + 31) * 3 + 2] == 0.25);
  CHECK(Image::from_flat(flat) == img);
  CHECK_THROWS_AS(Image::from_flat(SensorVector(100, 0.0)), DimensionError);
}

TEST_CASE("ppm bytes") {
  Image img(kWhite);
  img.at(0, 0, 0) = 0.0;
  img.at(0, 0, 1) = 0.5;
  const auto bytes = img.to_ppm();
  const std::string header = "P6\n50 50\n255\n";
  REQUIRE(bytes.size() == header.size() + 7500);
  for (std::size_t i = 0; i < header.size(); ++i) {
    CHECK(bytes[i] == static_cast<std::uint8_t>(header[i]));
  }
  CHECK(bytes[header.size() + 0] == 0);
  CHECK(bytes[header.size() + 1] == 128);  // round(0.5 * 255)
  CHECK(bytes[header.size() + 2] == 255);
}

TEST_CASE("moving a disk by one pixel shifts its support by one pixel") {
  Image a(kWhite);
  a.draw_disk({0.4, 0.4}, 0.1, kRed);
  Image b(kWhite);
  b.draw_disk({0.4 + 1.0 / kPixelsPerUnit, 0.4}, 0.1, kRed);
  const auto support_a = support(a);
  std::set<std::pair<int, int>> shifted;
  for (const auto& [row, col] : support_a) shifted.insert({row, col + 1});
  CHECK(support(b) == shifted);
}

TEST_CASE("rendering the same scene twice is identical") {
  const auto tips = ArmEnvironment::forward_kinematics({0.0, 0.0, 0.0});
  const Image a = render_arm({0.5, 0.5}, {tips.begin(), tips.end()});
  const Image b = render_arm({0.5, 0.5}, {tips.begin(), tips.end()});
  CHECK(a == b);
  CHECK(a.flat().size() == 7500);
}

TEST_CASE("moved object changes many pixels") {
  const Image at_center = render_object({0.5, 0.5}, 0.1, kRed);
  const Image moved = render_object({0.8, 0.8}, 0.1, kRed);
  int differing = 0;
  for (int row = 0; row < kImageSize; ++row) {
    for (int col = 0; col < kImageSize; ++col) {
      for (int ch = 0; ch < 3; ++ch) {
        if (at_center.at(row, col, ch) != moved.at(row, col, ch)) {
          ++differing;
          break;
        }
      }
    }
  }
  CHECK(differing >= 60);
}

TEST_CASE("recoloring keeps the support but changes the channels") {
  const Image red = render_object({0.5, 0.5}, 0.1, kRed);
  const Image cyan = render_object({0.5, 0.5}, 0.1, hue_to_rgb(0.5));
  CHECK(support(red) == support(cyan));
  CHECK_FALSE(red == cyan);
}

TEST_CASE("distinct arm endpoints render to distinct images") {
  Rng rng(606);
  int checked = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    PolicyParams a(3);
    PolicyParams b(3);
    for (double& j : a) j = rng.uniform(-1.0, 1.0);
    for (double& j : b) j = rng.uniform(-1.0, 1.0);
    const Vec2 end_a = ArmEnvironment::end_point(a);
    const Vec2 end_b = ArmEnvironment::end_point(b);
    if (distance(end_a, end_b) <= 0.06) continue;
    ++checked;
    const auto tips_a = ArmEnvironment::forward_kinematics(a);
    const auto tips_b = ArmEnvironment::forward_kinematics(b);
    const Image img_a = render_arm({0.5, 0.5}, {tips_a.begin(), tips_a.end()});
    const Image img_b = render_arm({0.5, 0.5}, {tips_b.begin(), tips_b.end()});
    CHECK_FALSE(img_a == img_b);
  }
  CHECK(checked > 5000);  // the filter must not hollow out the property
}
