#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agme/geometry.hpp"
#include "agme/types.hpp"

namespace agme {

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kWhite{1.0, 1.0, 1.0};
inline constexpr Rgb kBlack{0.0, 0.0, 0.0};
inline constexpr Rgb kRed{1.0, 0.0, 0.0};
inline constexpr Rgb kBlue{0.0, 0.0, 1.0};

// Hue in [0,1) around the color wheel, full saturation and value.
Rgb hue_to_rgb(double hue);

inline constexpr int kImageSize = 50;       // pixels per side
inline constexpr double kPixelsPerUnit = 50.0;  // workspace [0,1] fills the frame

// 50x50 RGB frame over the unit workspace. Rasterization is hard
// pixel-center testing with no anti-aliasing, so a rendered scene is
// bit-deterministic. Flattening is row-major with RGB interleaved per
// pixel: index(row, col, ch) = (row*50 + col)*3 + ch.
class Image {
 public:
  Image() : data_(static_cast<std::size_t>(kImageSize) * kImageSize * 3, 0.0) {}
  explicit Image(const Rgb& fill) : Image() { clear(fill); }

  void clear(const Rgb& color);

  // Disk of the given radius (workspace units) around center: every pixel
  // whose center lies within the radius takes the color.
  void draw_disk(Vec2 center, double radius, const Rgb& color);

  // Capsule of the given thickness (pixels) around the segment p1->p2
  // (workspace units).
  void draw_segment(Vec2 p1, Vec2 p2, double thickness_px, const Rgb& color);

  double& at(int row, int col, int ch) {
    return data_[(static_cast<std::size_t>(row) * kImageSize + col) * 3 + ch];
  }
  double at(int row, int col, int ch) const {
    return data_[(static_cast<std::size_t>(row) * kImageSize + col) * 3 + ch];
  }

  const SensorVector& flat() const { return data_; }
  SensorVector take_flat() && { return std::move(data_); }

  static Image from_flat(const SensorVector& flat);

  // Binary PPM: "P6\n50 50\n255\n" followed by one byte per channel,
  // round(value * 255).
  std::vector<std::uint8_t> to_ppm() const;
  void save_ppm(const std::string& path) const;

  bool operator==(const Image&) const = default;

 private:
  SensorVector data_;
};

// Scene renderers used by the environments (white background throughout).
Image render_arm(const Vec2& base, const std::vector<Vec2>& joints_xy);
Image render_object(Vec2 center, double radius, const Rgb& color);

}  // namespace agme
