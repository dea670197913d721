#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace venuescope::simd {

// Instruction sets with a batched edit-distance kernel.
enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

// Widest kernel supported by both this build and the running CPU. The
// VENUESCOPE_ISA environment variable (scalar|avx2|neon) can force a
// narrower one.
Isa detect_isa();
bool isa_available(Isa isa);

// Levenshtein distance by the textbook dynamic program over bytes. Kept as
// the reference every faster kernel is checked against.
std::size_t edit_distance_reference(std::string_view a, std::string_view b);

// Similarity normalized by the longer string: 1 - d / max(|a|, |b|); 1 when both are empty.
inline double similarity_from_distance(std::size_t distance, std::size_t len_a, std::size_t len_b) {
  const auto longest = len_a > len_b ? len_a : len_b;
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(distance) / static_cast<double>(longest);
}

// Patterns of at most 64 bytes packed for bit-parallel (Myers/Hyyro)
// evaluation, four per block. Each block stores one match mask per pattern
// and alphabet symbol, interleaved so a vector kernel loads a whole block row
// at once.
class PatternBank {
 public:
  static constexpr std::size_t kLanes = 4;
  static constexpr std::size_t kMaxPatternLength = 64;

  PatternBank() = default;
  // Throws std::invalid_argument for patterns longer than kMaxPatternLength.
  explicit PatternBank(std::vector<std::string> patterns);

  std::size_t size() const noexcept { return patterns_.size(); }
  std::size_t block_count() const noexcept { return (patterns_.size() + kLanes - 1) / kLanes; }
  const std::string& pattern(std::size_t i) const { return patterns_[i]; }

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::uint8_t symbol(unsigned char byte) const noexcept { return symbol_of_[byte]; }
  // kLanes masks for `symbol` within `block`.
  const std::uint64_t* masks(std::size_t block, std::uint8_t symbol) const noexcept {
    return &masks_[(block * alphabet_size_ + symbol) * kLanes];
  }
  const std::uint64_t* high_bits(std::size_t block) const noexcept { return &high_bits_[block * kLanes]; }
  const std::uint32_t* lengths(std::size_t block) const noexcept { return &lengths_[block * kLanes]; }

  // Maps text bytes to bank symbols; bytes absent from every pattern map to 0.
  void encode(std::string_view text, std::vector<std::uint8_t>& out) const;

 private:
  std::vector<std::string> patterns_;
  std::array<std::uint8_t, 256> symbol_of_{};
  std::size_t alphabet_size_ = 1;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> high_bits_;
  std::vector<std::uint32_t> lengths_;
};

// Distances from `text` to every pattern in blocks [first_block, last_block).
// `out` receives kLanes entries per block; entries past the last pattern are
// unspecified.
void batch_edit_distance(const PatternBank& bank, std::size_t first_block, std::size_t last_block,
                         std::string_view text, std::span<std::uint32_t> out, Isa isa);

namespace kernels {
// Per-ISA entry points; `encoded` is `text` after PatternBank::encode.
void batch_scalar(const PatternBank& bank, std::size_t first_block, std::size_t last_block,
                  std::span<const std::uint8_t> encoded, std::uint32_t* out);
void batch_avx2(const PatternBank& bank, std::size_t first_block, std::size_t last_block,
                std::span<const std::uint8_t> encoded, std::uint32_t* out);
void batch_neon(const PatternBank& bank, std::size_t first_block, std::size_t last_block,
                std::span<const std::uint8_t> encoded, std::uint32_t* out);
}  // namespace kernels

}  // namespace venuescope::simd
