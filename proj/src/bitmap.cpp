#include "cript/bitmap.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cript/error.hpp"

namespace cript {

Bitmap::Bitmap(int width, int height, bool fill) : width_(width), height_(height) {
  if (width < 1 || height < 1) throw std::invalid_argument("bitmap dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

std::size_t Bitmap::black_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

namespace {

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

Bitmap load_pbm(std::string_view text) {
  auto lines = split_lines(text);
  // Header tokens: magic, width, height. They may share lines or be split
  // across several; comments start with '#'.
  std::vector<std::pair<std::string, Line>> tokens;
  std::size_t li = 0;
  for (; li < lines.size() && tokens.size() < 3; ++li) {
    std::string_view body = strip_comment(lines[li].text);
    std::size_t i = 0;
    while (i < body.size() && tokens.size() < 3) {
      while (i < body.size() && is_space(body[i])) ++i;
      std::size_t j = i;
      while (j < body.size() && !is_space(body[j])) ++j;
      if (j > i) tokens.push_back({std::string(body.substr(i, j - i)), lines[li]});
      i = j;
    }
    if (tokens.size() == 3 && i < body.size()) {
      // Raster data on the header line is not supported.
      std::string_view rest = body.substr(i);
      if (rest.find_first_not_of(" \t\r\v\f") != std::string_view::npos)
        throw FormatError("unexpected data after PBM header", lines[li].number, i + 1);
    }
  }
  if (tokens.empty() || tokens[0].first != "P1")
    throw FormatError("missing P1 magic", 1, 1);
  if (tokens.size() < 3) throw FormatError("truncated PBM header", lines.back().number, 1);

  auto parse_dim = [](const std::pair<std::string, Line>& tok) {
    int value = 0;
    for (char c : tok.first) {
      if (c < '0' || c > '9') throw FormatError("bad dimension '" + tok.first + "'", tok.second.number, 1);
      value = value * 10 + (c - '0');
      if (value > 1 << 20) throw FormatError("dimension too large", tok.second.number, 1);
    }
    if (value == 0) throw FormatError("zero dimension", tok.second.number, 1);
    return value;
  };
  const int width = parse_dim(tokens[1]);
  const int height = parse_dim(tokens[2]);

  Bitmap b(width, height);
  int row = 0;
  for (; li < lines.size(); ++li) {
    std::string_view body = strip_comment(lines[li].text);
    if (body.find_first_not_of(" \t\r\v\f") == std::string_view::npos) continue;
    if (row == height) throw FormatError("more rows than declared height", lines[li].number, 1);
    int col = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (is_space(c)) continue;
      if (c != '0' && c != '1')
        throw FormatError(std::string("unexpected character '") + c + "'", lines[li].number, i + 1);
      if (col == width) throw FormatError("ragged row: too many pixels", lines[li].number, i + 1);
      b.set(row, col++, c == '1');
    }
    if (col != width)
      throw FormatError("ragged row: expected " + std::to_string(width) + " pixels, got " +
                            std::to_string(col),
                        lines[li].number, body.size() + 1);
    ++row;
  }
  if (row != height)
    throw FormatError("expected " + std::to_string(height) + " rows, got " + std::to_string(row),
                      lines.back().number, 1);
  return b;
}

Bitmap load_ascii(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().text.empty()) lines.pop_back();
  if (lines.empty()) throw FormatError("empty image", 1, 1);
  const std::size_t width = lines.front().text.size();
  if (width == 0) throw FormatError("zero-width row", lines.front().number, 1);
  Bitmap b(static_cast<int>(width), static_cast<int>(lines.size()));
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const Line& line = lines[r];
    if (line.text.size() != width)
      throw FormatError("ragged row: expected " + std::to_string(width) + " pixels, got " +
                            std::to_string(line.text.size()),
                        line.number, std::min(width, line.text.size()) + 1);
    for (std::size_t c = 0; c < width; ++c) {
      char ch = line.text[c];
      if (ch == '#' || ch == '1') {
        b.set(static_cast<int>(r), static_cast<int>(c), true);
      } else if (ch != '.' && ch != '0') {
        throw FormatError(std::string("unexpected character '") + ch + "'", line.number, c + 1);
      }
    }
  }
  return b;
}

}  // namespace

Bitmap load_bitmap(std::string_view text, ImageFormat format) {
  return format == ImageFormat::pbm ? load_pbm(text) : load_ascii(text);
}

Bitmap load_bitmap(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  bool pbm = first != std::string_view::npos && text.substr(first, 2) == "P1";
  return load_bitmap(text, pbm ? ImageFormat::pbm : ImageFormat::ascii);
}

Bitmap load_bitmap_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_bitmap(buf.str());
}

std::string save_bitmap(const Bitmap& b, ImageFormat format) {
  std::string out;
  if (format == ImageFormat::pbm) {
    out = "P1\n" + std::to_string(b.width()) + " " + std::to_string(b.height()) + "\n";
    for (int r = 0; r < b.height(); ++r) {
      for (int c = 0; c < b.width(); ++c) {
        if (c > 0) out += ' ';
        out += b.at(r, c) ? '1' : '0';
      }
      out += '\n';
    }
  } else {
    for (int r = 0; r < b.height(); ++r) {
      for (int c = 0; c < b.width(); ++c) out += b.at(r, c) ? '#' : '.';
      out += '\n';
    }
  }
  return out;
}

SwitchSeq switching_sequence(std::span<const std::uint8_t> row) {
  SwitchSeq s;
  bool black = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if ((row[i] != 0) != black) {
      black = !black;
      s.push_back(static_cast<int>(i) + 1);
    }
  }
  if (black) s.push_back(static_cast<int>(row.size()) + 1);
  return s;
}

std::vector<std::uint8_t> expand_switches(const SwitchSeq& s, int width) {
  std::vector<std::uint8_t> row(static_cast<std::size_t>(width), 0);
  for (std::size_t k = 0; k + 1 < s.size(); k += 2)
    for (int p = s[k]; p < s[k + 1]; ++p) row[static_cast<std::size_t>(p - 1)] = 1;
  return row;
}

}  // namespace cript
