// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace posediv {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kMidGray = {128, 128, 128};

struct Raster {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // row-major

  Raster() = default;
  Raster(int w, int h, Rgb fill);
  Rgb& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  const Rgb& at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  friend bool operator==(const Raster&, const Raster&) = default;
};

// Integer pixel box; x, y is the top-left corner, image y grows downward.
struct Box {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int Bottom() const { return y + h; }
  int Right() const { return x + w; }
  long long Area() const { return static_cast<long long>(w) * h; }
  friend bool operator==(const Box&, const Box&) = default;
};

long long IntersectionArea(const Box& a, const Box& b);

class BinaryMask {
 public:
  BinaryMask() = default;
  // Throws Error(kInvalidArgument) unless both dimensions are positive.
  BinaryMask(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool Get(int x, int y) const { return bits_[Index(x, y)] != 0; }
  void Set(int x, int y, bool v) { bits_[Index(x, y)] = v ? 1 : 0; }
  std::size_t Count() const;
  bool Empty() const { return Count() == 0; }
  // Tight bounding box of the set pixels; nullopt when empty.
  std::optional<Box> BoundingBox() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t Index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

// A pixel is foreground iff its Euclidean RGB distance from `mono_color`
// exceeds `tolerance`.
BinaryMask ExtractMask(const Raster& raster, Rgb mono_color, double tolerance);

// 3x3 full structuring element. Out-of-canvas neighbours are ignored, so
// dilation never grows past the border and erosion never eats in from it.
BinaryMask Dilate(const BinaryMask& mask);
BinaryMask Erode(const BinaryMask& mask);

inline constexpr int kCleanupDilations = 4;
inline constexpr int kCleanupErosions = 2;

// Four dilations followed by two erosions.
BinaryMask MorphCleanup(const BinaryMask& mask);

}  // namespace posediv
