#include <immintrin.h>

#include "venuescope/edit_distance.hpp"

namespace venuescope::simd::kernels {

// Four patterns per 256-bit register; same recurrence as batch_scalar.
void batch_avx2(const PatternBank& bank, std::size_t first_block, std::size_t last_block,
                std::span<const std::uint8_t> encoded, std::uint32_t* out) {
  constexpr auto lanes = PatternBank::kLanes;
  static_assert(lanes == 4);
  const __m256i ones = _mm256_set1_epi64x(-1);
  const __m256i one = _mm256_set1_epi64x(1);
  for (std::size_t block = first_block; block < last_block; ++block) {
    const __m256i mask = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bank.high_bits(block)));
    const auto* len = bank.lengths(block);
    __m256i vp = ones;
    __m256i vn = _mm256_setzero_si256();
    __m256i score = _mm256_set_epi64x(len[3], len[2], len[1], len[0]);
    for (const auto sym : encoded) {
      const __m256i eq = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bank.masks(block, sym)));
      const __m256i sum = _mm256_add_epi64(_mm256_and_si256(eq, vp), vp);
      const __m256i d0 = _mm256_or_si256(_mm256_or_si256(_mm256_xor_si256(sum, vp), eq), vn);
      __m256i hp = _mm256_or_si256(vn, _mm256_xor_si256(_mm256_or_si256(d0, vp), ones));
      __m256i hn = _mm256_and_si256(d0, vp);
      // cmpeq yields -1 where the top bit is set
      score = _mm256_sub_epi64(score, _mm256_cmpeq_epi64(_mm256_and_si256(hp, mask), mask));
      score = _mm256_add_epi64(score, _mm256_cmpeq_epi64(_mm256_and_si256(hn, mask), mask));
      hp = _mm256_or_si256(_mm256_slli_epi64(hp, 1), one);
      hn = _mm256_slli_epi64(hn, 1);
      vp = _mm256_or_si256(hn, _mm256_xor_si256(_mm256_or_si256(d0, hp), ones));
      vn = _mm256_and_si256(hp, d0);
    }
    alignas(32) std::uint64_t result[lanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(result), score);
    for (std::size_t lane = 0; lane < lanes; ++lane)
      out[(block - first_block) * lanes + lane] =
          len[lane] == 0 ? static_cast<std::uint32_t>(encoded.size()) : static_cast<std::uint32_t>(result[lane]);
  }
}

}  // namespace venuescope::simd::kernels
