#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cript {

/// Arc types of a unicritical band: B has both ends on the lower level,
/// D both on the upper level, C crosses the band.
enum class Letter : char { B = 'B', C = 'C', D = 'D' };

using CriptString = std::vector<Letter>;

/// A code word: band strings in order of decreasing height.
struct CriptCode {
  std::vector<CriptString> strings;

  bool empty() const noexcept { return strings.empty(); }
  std::size_t letter_count() const noexcept;

  friend bool operator==(const CriptCode&, const CriptCode&) = default;
  friend auto operator<=>(const CriptCode&, const CriptCode&) = default;
};

struct LetterCounts {
  std::size_t b = 0, c = 0, d = 0;
};

LetterCounts count_letters(const CriptString& s);

/// Non-empty and made only of C.
bool is_trivial(const CriptString& s);

/// Uppercase letters, ';' between strings, no whitespace.
std::string serialize_code(const CriptCode& code);
std::string to_string(const CriptString& s);

/// Accepts B/C/D in either case and ';', skipping whitespace. Any other
/// character raises FormatError carrying its 1-based character offset.
CriptCode parse_code(std::string_view text);

}  // namespace cript
