#include "venuescope/edit_distance.hpp"

namespace venuescope::simd::kernels {

// Bit-parallel global edit distance (Hyyro 2003 formulation of Myers 1999),
// one pattern at a time.
void batch_scalar(const PatternBank& bank, std::size_t first_block, std::size_t last_block,
                  std::span<const std::uint8_t> encoded, std::uint32_t* out) {
  constexpr auto lanes = PatternBank::kLanes;
  for (std::size_t block = first_block; block < last_block; ++block) {
    const auto* hb = bank.high_bits(block);
    const auto* len = bank.lengths(block);
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      std::uint64_t vp = ~std::uint64_t{0};
      std::uint64_t vn = 0;
      std::uint64_t score = len[lane];
      const std::uint64_t mask = hb[lane];
      for (const auto sym : encoded) {
        const std::uint64_t eq = bank.masks(block, sym)[lane];
        const std::uint64_t d0 = (((eq & vp) + vp) ^ vp) | eq | vn;
        std::uint64_t hp = vn | ~(d0 | vp);
        std::uint64_t hn = d0 & vp;
        score += (hp & mask) != 0;
        score -= (hn & mask) != 0;
        hp = (hp << 1) | 1;
        hn = hn << 1;
        vp = hn | ~(d0 | hp);
        vn = hp & d0;
      }
      out[(block - first_block) * lanes + lane] =
          len[lane] == 0 ? static_cast<std::uint32_t>(encoded.size()) : static_cast<std::uint32_t>(score);
    }
  }
}

}  // namespace venuescope::simd::kernels
