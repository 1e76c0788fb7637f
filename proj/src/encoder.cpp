#include "cript/encoder.hpp"

#include <algorithm>
#include <utility>

namespace cript {

namespace {

constexpr long long kNegInf = -(1LL << 40);
constexpr long long kPosInf = 1LL << 40;

/// 1-based view of a switching sequence with -inf/+inf past either end.
class Switches {
 public:
  explicit Switches(const SwitchSeq& s) : s_(s) {}

  long long operator()(long long idx) const {
    if (idx < 1) return kNegInf;
    if (idx > size()) return kPosInf;
    return s_[static_cast<std::size_t>(idx - 1)];
  }
  int size() const { return static_cast<int>(s_.size()); }

  int count_less(long long x) const {
    return static_cast<int>(std::lower_bound(s_.begin(), s_.end(), x) - s_.begin());
  }
  int count_le(long long x) const {
    return static_cast<int>(std::upper_bound(s_.begin(), s_.end(), x) - s_.begin());
  }

 private:
  const SwitchSeq& s_;
};

/// Boundary x-coordinate of switch `idx` (value `s`) in units of 1/20 column.
long long edge20(int idx, long long s) { return 20 * s - (idx % 2 == 1 ? 11 : 9); }

int kind_rank(Letter k) {
  switch (k) {
    case Letter::C: return 0;
    case Letter::B: return 1;
    case Letter::D: return 2;
  }
  return 3;
}

void push_b_pair(std::vector<BandLetter>& out, const Switches& m, int i) {
  out.push_back({Letter::B, static_cast<int>(2 * edge20(i, m(i))), 0, i, i + 1});
  out.push_back({Letter::B, static_cast<int>(2 * edge20(i + 1, m(i + 1))), 0, i + 1, i});
}

void push_d_pair(std::vector<BandLetter>& out, const Switches& n, int j) {
  out.push_back({Letter::D, static_cast<int>(2 * edge20(j, n(j))), j, 0, j + 1});
  out.push_back({Letter::D, static_cast<int>(2 * edge20(j + 1, n(j + 1))), j + 1, 0, j});
}

void push_crossings(std::vector<BandLetter>& out, std::vector<std::pair<int, int>>& pairs,
                    const Switches& n, const Switches& m) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [j, i] : pairs) out.push_back({Letter::C, static_cast<int>(edge20(j, n(j)) + edge20(i, m(i))), j, i, 0});
}

}  // namespace

bool band_order(const BandLetter& a, const BandLetter& b) noexcept {
  if (a.key40 != b.key40) return a.key40 < b.key40;
  if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
  if (a.lower != b.lower) return a.lower < b.lower;
  return a.upper < b.upper;
}

std::vector<BandLetter> band_string(const SwitchSeq& upper, const SwitchSeq& lower) {
  const Switches n(upper);
  const Switches m(lower);
  const int k = n.size();
  const int l = m.size();
  std::vector<BandLetter> out;
  out.reserve(static_cast<std::size_t>(k + l));

  // B pairs: a lower run inside an upper gap, or a lower gap under an upper run.
  for (int i = 1; i < l; ++i) {
    if (i % 2 == 1) {
      const int j = n.count_less(m(i));
      if (j % 2 == 0 && m(i + 1) < n(j + 1)) push_b_pair(out, m, i);
    } else {
      const int j = n.count_le(m(i));
      if (j % 2 == 1 && m(i + 1) <= n(j + 1)) push_b_pair(out, m, i);
    }
  }
  // D pairs, the same with the rows exchanged.
  for (int j = 1; j < k; ++j) {
    if (j % 2 == 1) {
      const int i = m.count_less(n(j));
      if (i % 2 == 0 && n(j + 1) < m(i + 1)) push_d_pair(out, n, j);
    } else {
      const int i = m.count_le(n(j));
      if (i % 2 == 1 && n(j + 1) <= m(i + 1)) push_d_pair(out, n, j);
    }
  }

  // C letters: pairs (j, i) of an upper and a lower switch. A pairing can
  // satisfy several clauses, so collect and deduplicate.
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= k; ++j) {
    const int i = m.count_less(n(j)) + 1;
    if (i <= l && m(i) == n(j) && (i + j) % 2 == 0) pairs.emplace_back(j, i);
  }
  for (int j = 1; j <= k; ++j) {
    const int i = m.count_le(n(j)) + 1;  // first lower switch right of n_j
    if (i > l || i % 2 != j % 2) continue;
    if (j % 2 == 1) {
      if (m(i - 1) < n(j) && m(i) <= n(j + 1)) pairs.emplace_back(j, i);
    } else {
      if (m(i) < n(j + 1)) pairs.emplace_back(j, i);
    }
  }
  for (int i = 1; i <= l; ++i) {
    const int j = n.count_le(m(i)) + 1;  // first upper switch right of m_i
    if (j > k || i % 2 != j % 2) continue;
    if (i % 2 == 1) {
      if (n(j - 1) < m(i) && n(j) <= m(i + 1)) pairs.emplace_back(j, i);
    } else {
      if (n(j) < m(i + 1)) pairs.emplace_back(j, i);
    }
  }
  push_crossings(out, pairs, n, m);

  std::sort(out.begin(), out.end(), band_order);
  return out;
}

std::vector<BandLetter> band_string_reference(const SwitchSeq& upper, const SwitchSeq& lower) {
  const Switches n(upper);
  const Switches m(lower);
  const int k = n.size();
  const int l = m.size();
  std::vector<BandLetter> out;

  for (int i = 1; i < l; ++i) {
    bool found = false;
    for (int j = 0; j <= k && !found; ++j) {
      if (i % 2 == 1 && j % 2 == 0)
        found = n(j) < m(i) && m(i) < m(i + 1) && m(i + 1) < n(j + 1);
      else if (i % 2 == 0 && j % 2 == 1)
        found = n(j) <= m(i) && m(i) < m(i + 1) && m(i + 1) <= n(j + 1);
    }
    if (found) push_b_pair(out, m, i);
  }
  for (int j = 1; j < k; ++j) {
    bool found = false;
    for (int i = 0; i <= l && !found; ++i) {
      if (j % 2 == 1 && i % 2 == 0)
        found = m(i) < n(j) && n(j) < n(j + 1) && n(j + 1) < m(i + 1);
      else if (j % 2 == 0 && i % 2 == 1)
        found = m(i) <= n(j) && n(j) < n(j + 1) && n(j + 1) <= m(i + 1);
    }
    if (found) push_d_pair(out, n, j);
  }

  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= k; ++j) {
    for (int i = 1; i <= l; ++i) {
      bool c = false;
      if ((i + j) % 2 == 0 && n(j) == m(i)) c = true;
      if (i % 2 == 1 && j % 2 == 1) {
        c = c || (m(i - 1) < n(j) && n(j) < m(i) && m(i) <= n(j + 1)) ||
            (n(j - 1) < m(i) && m(i) < n(j) && n(j) <= m(i + 1));
      }
      if (i % 2 == 0 && j % 2 == 0) {
        c = c || (m(i - 1) <= n(j) && n(j) < m(i) && m(i) < n(j + 1)) ||
            (n(j - 1) <= m(i) && m(i) < n(j) && n(j) < m(i + 1));
      }
      if (c) pairs.emplace_back(j, i);
    }
  }
  push_crossings(out, pairs, n, m);

  std::sort(out.begin(), out.end(), band_order);
  return out;
}

CriptString letters_of(std::span<const BandLetter> band) {
  CriptString s;
  s.reserve(band.size());
  for (const auto& l : band) s.push_back(l.kind);
  return s;
}

bool Band::trivial() const noexcept {
  return !letters.empty() && std::all_of(letters.begin(), letters.end(),
                                         [](const BandLetter& l) { return l.kind == Letter::C; });
}

Encoder::Encoder(int width) {
  code_.width = width;
}

void Encoder::push_row(std::span<const std::uint8_t> row) {
  push_switches(switching_sequence(row));
}

void Encoder::push_switches(SwitchSeq row) {
  Band band;
  band.level = rows_ + 0.5;
  band.letters = band_string(previous_, row);
  code_.bands.push_back(std::move(band));
  previous_ = std::move(row);
  ++rows_;
}

FullCode Encoder::finish() && {
  Band band;
  band.level = rows_ + 0.5;
  band.letters = band_string(previous_, {});
  code_.bands.push_back(std::move(band));
  code_.height = rows_;
  return std::move(code_);
}

FullCode encode(const Bitmap& b) {
  Encoder enc(b.width());
  for (int r = 0; r < b.height(); ++r) enc.push_row(b.row(r));
  return std::move(enc).finish();
}

CriptCode minimal_code(const FullCode& f) {
  CriptCode c;
  for (const auto& band : f.bands)
    if (band.critical()) c.strings.push_back(band.string());
  return c;
}

CriptCode full_strings(const FullCode& f) {
  CriptCode c;
  for (const auto& band : f.bands) c.strings.push_back(band.string());
  return c;
}

}  // namespace cript
