#include "cript/code.hpp"

#include <algorithm>
#include <cctype>

#include "cript/error.hpp"

namespace cript {

std::size_t CriptCode::letter_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : strings) n += s.size();
  return n;
}

LetterCounts count_letters(const CriptString& s) {
  LetterCounts n;
  for (Letter l : s) {
    switch (l) {
      case Letter::B: ++n.b; break;
      case Letter::C: ++n.c; break;
      case Letter::D: ++n.d; break;
    }
  }
  return n;
}

bool is_trivial(const CriptString& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](Letter l) { return l == Letter::C; });
}

std::string to_string(const CriptString& s) {
  std::string out;
  out.reserve(s.size());
  for (Letter l : s) out += static_cast<char>(l);
  return out;
}

std::string serialize_code(const CriptCode& code) {
  std::string out;
  for (std::size_t i = 0; i < code.strings.size(); ++i) {
    if (i > 0) out += ';';
    out += to_string(code.strings[i]);
  }
  return out;
}

CriptCode parse_code(std::string_view text) {
  CriptCode code;
  CriptString current;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    any = true;
    switch (c) {
      case 'B': current.push_back(Letter::B); break;
      case 'C': current.push_back(Letter::C); break;
      case 'D': current.push_back(Letter::D); break;
      case ';':
        code.strings.push_back(std::move(current));
        current.clear();
        break;
      default:
        throw FormatError(std::string("invalid code character '") + text[i] + "' at character " +
                              std::to_string(i + 1),
                          1, i + 1);
    }
  }
  if (any) code.strings.push_back(std::move(current));
  return code;
}

}  // namespace cript
