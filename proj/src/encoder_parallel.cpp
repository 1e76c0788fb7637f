#include <cstddef>

#include "cript/encoder.hpp"

namespace cript {

FullCode encode_parallel(const Bitmap& b) {
  const int h = b.height();
  std::vector<SwitchSeq> switches(static_cast<std::size_t>(h) + 2);  // [0] and [h+1] stay white

#pragma omp parallel for schedule(static)
  for (int r = 0; r < h; ++r) switches[static_cast<std::size_t>(r) + 1] = switching_sequence(b.row(r));

  FullCode code;
  code.width = b.width();
  code.height = h;
  code.bands.resize(static_cast<std::size_t>(h) + 1);

#pragma omp parallel for schedule(dynamic, 16)
  for (int k = 0; k <= h; ++k) {
    auto& band = code.bands[static_cast<std::size_t>(k)];
    band.level = k + 0.5;
    band.letters = band_string(switches[static_cast<std::size_t>(k)], switches[static_cast<std::size_t>(k) + 1]);
  }
  return code;
}

}  // namespace cript
