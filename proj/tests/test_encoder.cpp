#include <doctest.h>

#include <random>

#include "cript/encoder.hpp"
#include "cript/error.hpp"
#include "support/fixtures.hpp"

using namespace cript;
using testing::ascii;

namespace {

std::string band(const SwitchSeq& upper, const SwitchSeq& lower) {
  return to_string(letters_of(band_string(upper, lower)));
}

SwitchSeq random_switches(std::mt19937_64& rng, int width) {
  std::bernoulli_distribution px(0.45);
  std::vector<std::uint8_t> row(static_cast<std::size_t>(width));
  for (auto& p : row) p = px(rng) ? 1 : 0;
  return switching_sequence(row);
}

/// Each upper run 8-touches exactly one lower run and vice versa, in order.
bool runs_continue(const SwitchSeq& up, const SwitchSeq& down) {
  if (up.size() != down.size()) return false;
  auto touches = [](int a0, int a1, int b0, int b1) { return a0 <= b1 && b0 <= a1; };
  for (std::size_t r = 0; r < up.size(); r += 2)
    for (std::size_t q = 0; q < down.size(); q += 2)
      if (touches(up[r], up[r + 1], down[q], down[q + 1]) != (r == q)) return false;
  return true;
}

}  // namespace

TEST_CASE("band strings for the documented switch pairs") {
  CHECK(band({}, {2, 4}) == "BB");
  CHECK(band({2, 8}, {2, 4, 6, 8}) == "CBBC");
  CHECK(band({2, 5}, {5, 8}) == "CC");  // diagonal pixels stay connected
  CHECK(band({2, 4}, {2, 4}) == "CC");
  CHECK(band({2, 4}, {}) == "DD");
  CHECK(band({}, {}).empty());
}

TEST_CASE("diagonal pinch orders the closing gap before the opening one") {
  // "#.####" over "##..##": the gap at column 2 closes, the gap at 3-4 opens,
  // and both arcs meet the level next to the same diagonal contact.
  CHECK(band({1, 2, 3, 7}, {1, 3, 5, 7}) == "CDDBBC");
}

TEST_CASE("band letters carry switch indices") {
  const auto letters = band_string({2, 8}, {2, 4, 6, 8});
  REQUIRE(letters.size() == 4);
  CHECK(letters[0].upper == 1);
  CHECK(letters[0].lower == 1);
  CHECK(letters[1].lower == 2);
  CHECK(letters[1].conjugate_switch == 3);
  CHECK(letters[1].upper == 0);
  CHECK(letters[3].upper == 2);
  CHECK(letters[3].lower == 4);
  CHECK(letters[0].sort_key() < letters[1].sort_key());
}

TEST_CASE("fast band strings agree with exhaustive enumeration") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> wd(1, 20);
  for (int it = 0; it < 5000; ++it) {
    const int w = wd(rng);
    const SwitchSeq up = random_switches(rng, w);
    const SwitchSeq down = random_switches(rng, w);
    REQUIRE(band_string(up, down) == band_string_reference(up, down));
  }
}

TEST_CASE("3x3 black square") {
  const FullCode f = encode(Bitmap(3, 3, true));
  REQUIRE(f.bands.size() == 4);
  const std::vector<std::string> strings{"BB", "CC", "CC", "DD"};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(to_string(f.bands[k].string()) == strings[k]);
    CHECK(f.bands[k].level == doctest::Approx(k + 0.5));
  }
  CHECK(f.bands[1].trivial());
  CHECK_FALSE(f.bands[0].trivial());
  CHECK(serialize_code(minimal_code(f)) == "BB;DD");
}

TEST_CASE("all-white image has only empty strings") {
  const FullCode f = encode(Bitmap(5, 4));
  CHECK(f.bands.size() == 5);
  for (const auto& b : f.bands) CHECK(b.empty());
  CHECK(minimal_code(f).empty());
}

TEST_CASE("letter glyphs") {
  const FullCode o = encode(ascii(testing::kGlyphO));
  std::vector<std::string> critical;
  for (const auto& b : o.bands)
    if (b.critical()) critical.push_back(to_string(b.string()));
  CHECK(critical == std::vector<std::string>{"BB", "CBBC", "CDDC", "DD"});
  CHECK(serialize_code(minimal_code(o)) == testing::kCodeO);
  CHECK(serialize_code(minimal_code(encode(ascii(testing::kGlyphA)))) == testing::kCodeA);
  CHECK(serialize_code(minimal_code(encode(ascii(testing::kGlyphB)))) == testing::kCodeB);
}

TEST_CASE("code text") {
  const CriptCode c = parse_code("BB;DD");
  REQUIRE(c.strings.size() == 2);
  CHECK(c.strings[0] == CriptString{Letter::B, Letter::B});
  CHECK(c.strings[1] == CriptString{Letter::D, Letter::D});
  CHECK(parse_code("bb ; dd") == c);
  CHECK(serialize_code(c) == "BB;DD");
  CHECK(parse_code("").empty());
  CHECK(parse_code("BB;;DD").strings.size() == 3);
  try {
    parse_code("BX;DD");
    FAIL("expected a parse error");
  } catch (const FormatError& e) {
    CHECK(e.column() == 2);
  }
}

TEST_CASE("streaming encoder matches whole-image encoders") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    const Bitmap b = testing::random_bitmap(rng, 40, 40);
    Encoder enc(b.width());
    for (int r = 0; r < b.height(); ++r) enc.push_switches(switching_sequence(b.row(r)));
    CHECK(enc.rows_pushed() == b.height());
    const FullCode streamed = std::move(enc).finish();
    const FullCode whole = encode(b);
    REQUIRE(streamed == whole);
    REQUIRE(encode_parallel(b) == whole);
  }
}

TEST_CASE("band invariants on random bitmaps") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 1000; ++it) {
    const Bitmap b = testing::random_bitmap(rng, 32, 32);
    const FullCode f = encode(b);
    REQUIRE(f.bands.size() == static_cast<std::size_t>(b.height()) + 1);
    std::vector<SwitchSeq> rows{{}};
    for (int r = 0; r < b.height(); ++r) rows.push_back(switching_sequence(b.row(r)));
    rows.push_back({});

    for (std::size_t k = 0; k < f.bands.size(); ++k) {
      const auto& letters = f.bands[k].letters;
      // Sort keys are strictly increasing: no ties to break.
      for (std::size_t p = 1; p < letters.size(); ++p) REQUIRE(letters[p - 1].key40 < letters[p].key40);
      // B and D letters come in adjacent conjugate pairs.
      for (std::size_t p = 0; p < letters.size();) {
        if (letters[p].kind == Letter::C) {
          ++p;
          continue;
        }
        REQUIRE(p + 1 < letters.size());
        REQUIRE(letters[p + 1].kind == letters[p].kind);
        p += 2;
      }
      // Lower ends enumerate the lower row's switches left to right, upper
      // ends the upper row's: contacts between bands are index matches.
      int lower = 0, upper = 0;
      for (const auto& l : letters) {
        if (l.kind != Letter::D) REQUIRE(l.lower == ++lower);
        if (l.kind != Letter::B) REQUIRE(l.upper == ++upper);
      }
      REQUIRE(lower == static_cast<int>(rows[k + 1].size()));
      REQUIRE(upper == static_cast<int>(rows[k].size()));
      // Bands without a critical event hold only crossings.
      if (runs_continue(rows[k], rows[k + 1]))
        REQUIRE((letters.empty() || f.bands[k].trivial()));
      // Balance between consecutive bands.
      if (k + 1 < f.bands.size()) {
        const auto above = count_letters(f.bands[k].string());
        const auto below = count_letters(f.bands[k + 1].string());
        REQUIRE(above.b + above.c == below.d + below.c);
      }
    }
  }
}

TEST_CASE("minimal code survives level-preserving deformations") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 500; ++it) {
    const Bitmap b = testing::random_bitmap(rng, 20, 20);
    const CriptCode m = minimal_code(encode(b));
    std::uniform_int_distribution<int> row(0, b.height() - 1), col(0, b.width() - 1);
    REQUIRE(minimal_code(encode(testing::duplicate_row(b, row(rng)))) == m);
    REQUIRE(minimal_code(encode(testing::duplicate_column(b, col(rng)))) == m);
    REQUIRE(minimal_code(encode(testing::pad(b, 3))) == m);
  }
}
