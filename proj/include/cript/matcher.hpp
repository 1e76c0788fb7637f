#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cript/bitmap.hpp"

namespace cript {

/// Serialized minimal code -> labels of the glyphs sharing it.
struct CodeDictionary {
  std::map<std::string, std::set<std::string>> entries;

  bool empty() const noexcept { return entries.empty(); }
  friend bool operator==(const CodeDictionary&, const CodeDictionary&) = default;
};

/// Serialized simplified minimal code of a single-glyph bitmap. Throws
/// DomainError unless the bitmap holds exactly one domain component.
std::string glyph_code(const Bitmap& glyph, int min_gap = 1);

void add_sample(CodeDictionary& dict, const Bitmap& glyph, const std::string& label, int min_gap = 1);

CodeDictionary build_dictionary(const std::vector<std::pair<Bitmap, std::string>>& samples,
                                int min_gap = 1);

/// Levenshtein distance over the symbols of two serialized codes, ';' included.
std::size_t edit_distance(std::string_view a, std::string_view b);

struct Match {
  std::string code;
  std::set<std::string> labels;
  std::size_t distance = 0;
};

struct Classification {
  bool no_glyph = false;
  std::string code;
  std::vector<Match> matches;  // ascending distance, ties by code
};

/// Ranks dictionary entries against the bitmap's code; at most `k` results.
Classification classify(const Bitmap& b, const CodeDictionary& dict, std::size_t k, int min_gap = 1);

/// Line format: "<code>\t<label>", one line per (code, label).
std::string save_dictionary(const CodeDictionary& dict);

/// Merges the lines of `text` into `dict`. Keys must be valid codes.
void load_dictionary(std::string_view text, CodeDictionary& dict);

}  // namespace cript
