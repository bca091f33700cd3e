#include "agme/camera.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace agme {

Rgb hue_to_rgb(double hue) {
  hue -= std::floor(hue);  // wrap into [0,1)
  const double h6 = hue * 6.0;
  const int sector = static_cast<int>(h6) % 6;
  const double x = 1.0 - std::fabs(std::fmod(h6, 2.0) - 1.0);
  switch (sector) {
    case 0: return {1.0, x, 0.0};
    case 1: return {x, 1.0, 0.0};
    case 2: return {0.0, 1.0, x};
    case 3: return {0.0, x, 1.0};
    case 4: return {x, 0.0, 1.0};
    default: return {1.0, 0.0, x};
  }
}

void Image::clear(const Rgb& color) {
  for (std::size_t i = 0; i < data_.size(); i += 3) {
    data_[i] = color.r;
    data_[i + 1] = color.g;
    data_[i + 2] = color.b;
  }
}

namespace {

inline void set_pixel(Image& img, int row, int col, const Rgb& color) {
  img.at(row, col, 0) = color.r;
  img.at(row, col, 1) = color.g;
  img.at(row, col, 2) = color.b;
}

}  // namespace

void Image::draw_disk(Vec2 center, double radius, const Rgb& color) {
  // pixel (row, col) has its center at ((col+0.5)/50, (row+0.5)/50)
  const double cx = center.x * kPixelsPerUnit;
  const double cy = center.y * kPixelsPerUnit;
  const double r_px = radius * kPixelsPerUnit;
  const int row_lo = std::max(0, static_cast<int>(std::floor(cy - r_px - 1.0)));
  const int row_hi =
      std::min(kImageSize - 1, static_cast<int>(std::ceil(cy + r_px + 1.0)));
  const int col_lo = std::max(0, static_cast<int>(std::floor(cx - r_px - 1.0)));
  const int col_hi =
      std::min(kImageSize - 1, static_cast<int>(std::ceil(cx + r_px + 1.0)));
  const double r_sq = r_px * r_px;
  for (int row = row_lo; row <= row_hi; ++row) {
    const double dy = (row + 0.5) - cy;
    for (int col = col_lo; col <= col_hi; ++col) {
      const double dx = (col + 0.5) - cx;
      if (dx * dx + dy * dy <= r_sq) set_pixel(*this, row, col, color);
    }
  }
}

void Image::draw_segment(Vec2 p1, Vec2 p2, double thickness_px,
                         const Rgb& color) {
  const Vec2 a{p1.x * kPixelsPerUnit, p1.y * kPixelsPerUnit};
  const Vec2 b{p2.x * kPixelsPerUnit, p2.y * kPixelsPerUnit};
  const double half = thickness_px / 2.0;
  const int row_lo = std::max(
      0, static_cast<int>(std::floor(std::min(a.y, b.y) - half - 1.0)));
  const int row_hi =
      std::min(kImageSize - 1,
               static_cast<int>(std::ceil(std::max(a.y, b.y) + half + 1.0)));
  const int col_lo = std::max(
      0, static_cast<int>(std::floor(std::min(a.x, b.x) - half - 1.0)));
  const int col_hi =
      std::min(kImageSize - 1,
               static_cast<int>(std::ceil(std::max(a.x, b.x) + half + 1.0)));
  for (int row = row_lo; row <= row_hi; ++row) {
    for (int col = col_lo; col <= col_hi; ++col) {
      const Vec2 pc{col + 0.5, row + 0.5};
      if (point_segment_distance(pc, a, b) <= half) {
        set_pixel(*this, row, col, color);
      }
    }
  }
}

Image Image::from_flat(const SensorVector& flat) {
  Image img;
  if (flat.size() != img.data_.size()) {
    throw DimensionError("Image::from_flat: expected " +
                         std::to_string(img.data_.size()) + " values, got " +
                         std::to_string(flat.size()));
  }
  img.data_ = flat;
  return img;
}

std::vector<std::uint8_t> Image::to_ppm() const {
  const std::string header = "P6\n" + std::to_string(kImageSize) + " " +
                             std::to_string(kImageSize) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + data_.size());
  for (double v : data_) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    out.push_back(static_cast<std::uint8_t>(std::lround(clamped * 255.0)));
  }
  return out;
}

void Image::save_ppm(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  const auto bytes = to_ppm();
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
}

Image render_arm(const Vec2& base, const std::vector<Vec2>& joints_xy) {
  Image img(kWhite);
  Vec2 prev = base;
  for (const Vec2& next : joints_xy) {
    img.draw_segment(prev, next, 2.0, kBlue);
    prev = next;
  }
  return img;
}

Image render_object(Vec2 center, double radius, const Rgb& color) {
  Image img(kWhite);
  img.draw_disk(center, radius, color);
  return img;
}

}  // namespace agme
