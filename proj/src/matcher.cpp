#include "cript/matcher.hpp"

#include <algorithm>
#include <numeric>

#include "cript/code_model.hpp"
#include "cript/encoder.hpp"
#include "cript/error.hpp"
#include "cript/simplifier.hpp"

namespace cript {

namespace {

CriptCode simplified(const Bitmap& b, int min_gap) {
  return simplify(encode(b), min_gap);
}

}  // namespace

std::string glyph_code(const Bitmap& glyph, int min_gap) {
  const CriptCode code = simplified(glyph, min_gap);
  const auto components = domain_components(code);
  if (components.size() != 1)
    throw DomainError("expected one glyph, found " + std::to_string(components.size()) +
                      " components");
  return serialize_code(code);
}

void add_sample(CodeDictionary& dict, const Bitmap& glyph, const std::string& label, int min_gap) {
  dict.entries[glyph_code(glyph, min_gap)].insert(label);
}

CodeDictionary build_dictionary(const std::vector<std::pair<Bitmap, std::string>>& samples, int min_gap) {
  CodeDictionary dict;
  for (const auto& [glyph, label] : samples) add_sample(dict, glyph, label, min_gap);
  return dict;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

Classification classify(const Bitmap& b, const CodeDictionary& dict, std::size_t k, int min_gap) {
  if (dict.empty()) throw DomainError("empty dictionary");
  Classification out;
  const CriptCode code = simplified(b, min_gap);
  if (code.empty()) {
    out.no_glyph = true;
    return out;
  }
  out.code = serialize_code(code);
  for (const auto& [key, labels] : dict.entries)
    out.matches.push_back({key, labels, edit_distance(out.code, key)});
  std::stable_sort(out.matches.begin(), out.matches.end(),
                   [](const Match& x, const Match& y) { return x.distance < y.distance; });
  if (out.matches.size() > k) out.matches.resize(k);
  return out;
}

std::string save_dictionary(const CodeDictionary& dict) {
  std::string out;
  for (const auto& [key, labels] : dict.entries)
    for (const auto& label : labels) out += key + "\t" + label + "\n";
  return out;
}

void load_dictionary(std::string_view text, CodeDictionary& dict) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab + 1 == line.size())
      throw FormatError("dictionary line needs '<code>\\t<label>'", line_no, 1);
    const CriptCode code = parse_code(line.substr(0, tab));
    auto report = validate(code);
    if (!report.valid() || code.empty()) throw FormatError("dictionary key is not a valid code", line_no, 1);
    dict.entries[serialize_code(code)].insert(std::string(line.substr(tab + 1)));
  }
}

}  // namespace cript
