#pragma once

#include <cstdint>
#include <vector>

namespace segbench {

// Row-major 2-D double image. The working currency of the preprocessing
// stage and of slice stacks.
struct Image2D {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<double> v;

  Image2D() = default;
  Image2D(std::int64_t r, std::int64_t c, double fill = 0.0)
      : rows(r), cols(c), v(static_cast<std::size_t>(r * c), fill) {}

  double& at(std::int64_t r, std::int64_t c) { return v[static_cast<std::size_t>(r * cols + c)]; }
  double at(std::int64_t r, std::int64_t c) const { return v[static_cast<std::size_t>(r * cols + c)]; }
  std::int64_t numel() const { return rows * cols; }
};

// 8-bit image; quantized slices and binary masks.
struct ImageU8 {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::uint8_t> v;

  ImageU8() = default;
  ImageU8(std::int64_t r, std::int64_t c, std::uint8_t fill = 0)
      : rows(r), cols(c), v(static_cast<std::size_t>(r * c), fill) {}

  std::uint8_t& at(std::int64_t r, std::int64_t c) { return v[static_cast<std::size_t>(r * cols + c)]; }
  std::uint8_t at(std::int64_t r, std::int64_t c) const { return v[static_cast<std::size_t>(r * cols + c)]; }
  std::int64_t numel() const { return rows * cols; }
};

}  // namespace segbench
