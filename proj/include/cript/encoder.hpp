#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cript/bitmap.hpp"
#include "cript/code.hpp"

namespace cript {

/// One letter of a band string together with the switches that produced it.
///
/// `upper` and `lower` are 1-based indices into the switching sequences of
/// the upper and lower row (0 when the letter has no end on that level).
/// Because both bands adjacent to a row index the same switching sequence,
/// a letter with `lower == k` in one band contacts the letter with
/// `upper == k` in the next band.
///
/// The sort key is where the letter meets the critical level in the
/// rectangle model (pixel c spans [c - 0.55, c + 0.55]): a switch opening a
/// run lies at s - 0.55, one closing a run at s - 0.45. B and D letters use
/// their own switch, C letters the midpoint of their two switches.
struct BandLetter {
  Letter kind = Letter::C;
  int key40 = 0;  // x-coordinate in units of 1/40 column
  int upper = 0;
  int lower = 0;
  int conjugate_switch = 0;  // the partner's switch index for B/D letters

  double sort_key() const noexcept { return key40 / 40.0; }
  friend bool operator==(const BandLetter&, const BandLetter&) = default;
};

/// Strict weak order on the letters of one band.
bool band_order(const BandLetter& a, const BandLetter& b) noexcept;

/// Letters of the band between two consecutive rows, left to right.
///
/// Evaluates the B, D and C switch conditions against `upper` (row k) and
/// `lower` (row k+1). Indices that fall off either end of a sequence act as
/// switches at -inf/+inf.
std::vector<BandLetter> band_string(const SwitchSeq& upper, const SwitchSeq& lower);

/// Same result as band_string, by exhaustive enumeration of every index
/// tuple. Quadratic; kept as the reference for tests and benchmarks.
std::vector<BandLetter> band_string_reference(const SwitchSeq& upper, const SwitchSeq& lower);

CriptString letters_of(std::span<const BandLetter> band);

struct Band {
  double level = 0.0;  // rows from the top + 0.5
  std::vector<BandLetter> letters;

  CriptString string() const { return letters_of(letters); }
  bool empty() const noexcept { return letters.empty(); }
  bool trivial() const noexcept;
  bool critical() const noexcept { return !empty() && !trivial(); }

  friend bool operator==(const Band&, const Band&) = default;
};

/// Every band of an image, top to bottom, including the two bands against
/// the virtual white rows above and below the image.
struct FullCode {
  int width = 0;
  int height = 0;
  std::vector<Band> bands;

  friend bool operator==(const FullCode&, const FullCode&) = default;
};

/// Row-at-a-time encoder. Keeps only the previous row's switching sequence.
class Encoder {
 public:
  explicit Encoder(int width);

  void push_row(std::span<const std::uint8_t> row);
  void push_switches(SwitchSeq row);

  /// Closes the image against a virtual white row and returns the code.
  FullCode finish() &&;

  int rows_pushed() const noexcept { return rows_; }

 private:
  FullCode code_;
  SwitchSeq previous_;
  int rows_ = 0;
};

FullCode encode(const Bitmap& b);

/// Computes switching sequences and band strings with OpenMP over rows.
/// Produces exactly the output of encode().
FullCode encode_parallel(const Bitmap& b);

/// Drops empty and trivial strings.
CriptCode minimal_code(const FullCode& f);

/// All strings, empty ones included, without levels.
CriptCode full_strings(const FullCode& f);

}  // namespace cript
