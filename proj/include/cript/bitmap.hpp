#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cript {

/// Black/white raster. Row 0 is the top of the image; `true` is black.
class Bitmap {
 public:
  Bitmap(int width, int height, bool fill = false);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool at(int row, int col) const { return cells_[index(row, col)] != 0; }
  void set(int row, int col, bool black) { cells_[index(row, col)] = black ? 1 : 0; }

  std::span<const std::uint8_t> row(int r) const {
    return {cells_.data() + static_cast<std::size_t>(r) * width_, static_cast<std::size_t>(width_)};
  }
  std::span<std::uint8_t> row(int r) {
    return {cells_.data() + static_cast<std::size_t>(r) * width_, static_cast<std::size_t>(width_)};
  }

  std::size_t black_count() const;

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

/// Switch positions of one row, 1-indexed: odd entries open a black run,
/// even entries close it. Pixels `p[2k] .. p[2k+1]-1` are black.
using SwitchSeq = std::vector<int>;

enum class ImageFormat { pbm, ascii };

/// Parses PBM P1 or ascii-art ('#'/'1' black, '.'/'0' white). Throws FormatError.
Bitmap load_bitmap(std::string_view text, ImageFormat format);

/// Picks the format from the "P1" magic, falling back to ascii-art.
Bitmap load_bitmap(std::string_view text);

Bitmap load_bitmap_file(const std::string& path);

std::string save_bitmap(const Bitmap& b, ImageFormat format);

SwitchSeq switching_sequence(std::span<const std::uint8_t> row);

/// Expands switch positions back to a pixel row of the given width.
std::vector<std::uint8_t> expand_switches(const SwitchSeq& s, int width);

}  // namespace cript
