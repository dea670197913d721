#include <arm_neon.h>

#include "venuescope/edit_distance.hpp"

namespace venuescope::simd::kernels {

// Two 128-bit registers cover the four lanes of a block.
void batch_neon(const PatternBank& bank, std::size_t first_block, std::size_t last_block,
                std::span<const std::uint8_t> encoded, std::uint32_t* out) {
  constexpr auto lanes = PatternBank::kLanes;
  static_assert(lanes == 4);
  const uint64x2_t one = vdupq_n_u64(1);
  for (std::size_t block = first_block; block < last_block; ++block) {
    const auto* hb = bank.high_bits(block);
    const auto* len = bank.lengths(block);
    for (std::size_t half = 0; half < 2; ++half) {
      const uint64x2_t mask = vld1q_u64(hb + 2 * half);
      uint64x2_t vp = vdupq_n_u64(~std::uint64_t{0});
      uint64x2_t vn = vdupq_n_u64(0);
      const std::uint64_t init[2] = {len[2 * half], len[2 * half + 1]};
      int64x2_t score = vreinterpretq_s64_u64(vld1q_u64(init));
      for (const auto sym : encoded) {
        const uint64x2_t eq = vld1q_u64(bank.masks(block, sym) + 2 * half);
        const uint64x2_t sum = vaddq_u64(vandq_u64(eq, vp), vp);
        const uint64x2_t d0 = vorrq_u64(vorrq_u64(veorq_u64(sum, vp), eq), vn);
        // vbicq(a, b) = a & ~b, vornq(a, b) = a | ~b
        uint64x2_t hp = vornq_u64(vn, vorrq_u64(d0, vp));
        uint64x2_t hn = vandq_u64(d0, vp);
        score = vsubq_s64(score, vreinterpretq_s64_u64(vceqq_u64(vandq_u64(hp, mask), mask)));
        score = vaddq_s64(score, vreinterpretq_s64_u64(vceqq_u64(vandq_u64(hn, mask), mask)));
        hp = vorrq_u64(vshlq_n_u64(hp, 1), one);
        hn = vshlq_n_u64(hn, 1);
        vp = vornq_u64(hn, vorrq_u64(d0, hp));
        vn = vandq_u64(hp, d0);
      }
      std::int64_t result[2];
      vst1q_s64(result, score);
      for (std::size_t k = 0; k < 2; ++k) {
        const auto lane = 2 * half + k;
        out[(block - first_block) * lanes + lane] =
            len[lane] == 0 ? static_cast<std::uint32_t>(encoded.size()) : static_cast<std::uint32_t>(result[k]);
      }
    }
  }
}

}  // namespace venuescope::simd::kernels
