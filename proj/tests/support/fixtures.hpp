#pragma once

// Glyph fixtures, random inputs and independent oracles shared by the unit
// and acceptance suites. Nothing here calls the encoder.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cript/bitmap.hpp"

namespace cript::testing {

// Critical levels of the three glyphs sit at least two rows apart.
inline const char* const kGlyphO =
    "..........\n"
    "...####...\n"
    "..######..\n"
    "..##..##..\n"
    "..##..##..\n"
    "..######..\n"
    "...####...\n"
    "..........\n";

inline const char* const kGlyphA =
    "..............\n"
    ".....####.....\n"
    "....######....\n"
    "....##..##....\n"
    "...##....##...\n"
    "...########...\n"
    "...########...\n"
    "..##......##..\n"
    "..##......##..\n"
    "..............\n";

inline const char* const kGlyphB =
    "...........\n"
    "..#####....\n"
    "..######...\n"
    "..##..##...\n"
    "..##..##...\n"
    "..######...\n"
    "..######...\n"
    "..##..##...\n"
    "..##..##...\n"
    "..######...\n"
    "..#####....\n"
    "...........\n";

inline const char* const kGlyphD =
    "..........\n"
    "..####....\n"
    "..#####...\n"
    "..##..##..\n"
    "..##..##..\n"
    "..#####...\n"
    "..####....\n"
    "..........\n";

// The A glyph with a one-pixel speck two rows below its feet.
inline const char* const kGlyphASpeck =
    "..............\n"
    ".....####.....\n"
    "....######....\n"
    "....##..##....\n"
    "...##....##...\n"
    "...########...\n"
    "...########...\n"
    "..##......##..\n"
    "..##......##..\n"
    "..............\n"
    "..............\n"
    "...........#..\n"
    "..............\n";

inline const char* const kSquare =
    "....\n"
    ".##.\n"
    ".##.\n"
    "....\n";

inline constexpr const char* kCodeO = "BB;CBBC;CDDC;DD";
inline constexpr const char* kCodeA = "BB;CBBC;CDDC;CBBC;DDDD";
inline constexpr const char* kCodeB = "BB;CBBC;CDDC;CBBC;CDDC;DD";

inline Bitmap ascii(const char* art) { return load_bitmap(art, ImageFormat::ascii); }

/// Random bitmap up to max_w x max_h with a density drawn per image.
inline Bitmap random_bitmap(std::mt19937_64& rng, int max_w, int max_h) {
  std::uniform_int_distribution<int> wd(1, max_w), hd(1, max_h);
  std::uniform_real_distribution<double> dens(0.05, 0.75);
  const int w = wd(rng), h = hd(rng);
  const double p = dens(rng);
  std::bernoulli_distribution px(p);
  Bitmap b(w, h);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) b.set(r, c, px(rng));
  return b;
}

/// 8-connected labels of the black pixels; -1 for white. Returns the count.
inline int label_components(const Bitmap& b, std::vector<int>& labels) {
  labels.assign(static_cast<std::size_t>(b.width()) * b.height(), -1);
  int count = 0;
  std::vector<std::pair<int, int>> stack;
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      if (!b.at(r, c) || labels[static_cast<std::size_t>(r) * b.width() + c] >= 0) continue;
      stack.push_back({r, c});
      labels[static_cast<std::size_t>(r) * b.width() + c] = count;
      while (!stack.empty()) {
        auto [y, x] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int ny = y + dy, nx = x + dx;
            if (ny < 0 || nx < 0 || ny >= b.height() || nx >= b.width() || !b.at(ny, nx)) continue;
            int& l = labels[static_cast<std::size_t>(ny) * b.width() + nx];
            if (l < 0) {
              l = count;
              stack.push_back({ny, nx});
            }
          }
        }
      }
      ++count;
    }
  }
  return count;
}

inline int count_components(const Bitmap& b) {
  std::vector<int> labels;
  return label_components(b, labels);
}

/// Connected components of the union of closed rectangles of height 1 and
/// width 1.1 centred on the black pixels, by pairwise intersection in
/// exact integer units of 1/20.
inline int count_rectangle_components(const Bitmap& b) {
  struct Rect { int x0, x1, y0, y1; };
  std::vector<Rect> rects;
  for (int r = 0; r < b.height(); ++r)
    for (int c = 0; c < b.width(); ++c)
      if (b.at(r, c)) rects.push_back({20 * c - 11, 20 * c + 11, 20 * r - 10, 20 * r + 10});
  std::vector<int> parent(rects.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      const Rect& a = rects[i];
      const Rect& o = rects[j];
      if (a.x0 <= o.x1 && o.x0 <= a.x1 && a.y0 <= o.y1 && o.y0 <= a.y1)
        parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    }
  }
  int count = 0;
  for (std::size_t i = 0; i < rects.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
  return count;
}

/// Bitmap holding only the pixels carrying `label`.
inline Bitmap only_label(const Bitmap& b, const std::vector<int>& labels, int label) {
  Bitmap out(b.width(), b.height());
  for (int r = 0; r < b.height(); ++r)
    for (int c = 0; c < b.width(); ++c)
      out.set(r, c, labels[static_cast<std::size_t>(r) * b.width() + c] == label);
  return out;
}

inline Bitmap duplicate_row(const Bitmap& b, int row) {
  Bitmap out(b.width(), b.height() + 1);
  for (int r = 0; r <= b.height(); ++r) {
    const int src = r <= row ? r : r - 1;
    for (int c = 0; c < b.width(); ++c) out.set(r, c, b.at(src, c));
  }
  return out;
}

inline Bitmap duplicate_column(const Bitmap& b, int col) {
  Bitmap out(b.width() + 1, b.height());
  for (int r = 0; r < b.height(); ++r)
    for (int c = 0; c <= b.width(); ++c) out.set(r, c, b.at(r, c <= col ? c : c - 1));
  return out;
}

inline Bitmap pad(const Bitmap& b, int border) {
  Bitmap out(b.width() + 2 * border, b.height() + 2 * border);
  for (int r = 0; r < b.height(); ++r)
    for (int c = 0; c < b.width(); ++c) out.set(r + border, c + border, b.at(r, c));
  return out;
}

}  // namespace cript::testing
