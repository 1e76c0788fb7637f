// Serial reference kernels against their fast or OpenMP counterparts.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include <omp.h>

#include "cript/encoder.hpp"
#include "cript/realizer.hpp"

using namespace cript;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

Bitmap random_bitmap(int w, int h, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution px(density);
  Bitmap b(w, h);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) b.set(r, c, px(rng));
  return b;
}

void report(const char* what, double reference, double fast, bool same) {
  std::printf("%-34s reference %9.4f s  fast %9.4f s  x%6.2f  %s\n", what, reference, fast, reference / fast,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int side = argc > 1 ? std::stoi(argv[1]) : 2048;
  std::printf("threads: %d\n", omp_get_max_threads());

  const Bitmap big = random_bitmap(side, side, 0.5, 1);
  FullCode serial, parallel;
  const double t_serial = best_of(3, [&] { serial = encode(big); });
  const double t_parallel = best_of(3, [&] { parallel = encode_parallel(big); });
  report(("encode " + std::to_string(side) + "^2").c_str(), t_serial, t_parallel, serial == parallel);

  // Exhaustive tuple enumeration is quadratic in run count: keep rows short.
  const Bitmap narrow = random_bitmap(48, 4000, 0.5, 2);
  std::vector<SwitchSeq> rows;
  for (int r = 0; r < narrow.height(); ++r) rows.push_back(switching_sequence(narrow.row(r)));
  bool same = true;
  const double t_ref = best_of(1, [&] {
    for (std::size_t r = 1; r < rows.size(); ++r) band_string_reference(rows[r - 1], rows[r]);
  });
  const double t_fast = best_of(3, [&] {
    for (std::size_t r = 1; r < rows.size(); ++r) band_string(rows[r - 1], rows[r]);
  });
  for (std::size_t r = 1; r < rows.size(); ++r)
    same = same && band_string(rows[r - 1], rows[r]) == band_string_reference(rows[r - 1], rows[r]);
  report("band strings 48 x 4000", t_ref, t_fast, same);

  const CriptCode code = minimal_code(encode(random_bitmap(24, 24, 0.45, 3)));
  const PlanarBoundary p = realize(code);
  Bitmap ref_img(1, 1), fast_img(1, 1);
  const double t_rref = best_of(1, [&] { ref_img = rasterize_reference(p, 4.0); });
  const double t_rfast = best_of(3, [&] { fast_img = rasterize(p, 4.0); });
  report(("rasterize " + std::to_string(fast_img.width()) + "x" + std::to_string(fast_img.height())).c_str(), t_rref,
         t_rfast, ref_img == fast_img);
  return 0;
}
