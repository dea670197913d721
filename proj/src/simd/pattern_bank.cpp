#include <stdexcept>

#include "venuescope/edit_distance.hpp"

namespace venuescope::simd {

PatternBank::PatternBank(std::vector<std::string> patterns) : patterns_(std::move(patterns)) {
  for (const auto& p : patterns_) {
    if (p.size() > kMaxPatternLength)
      throw std::invalid_argument("PatternBank: pattern longer than 64 bytes: " + p);
    for (unsigned char c : p) {
      if (symbol_of_[c] == 0) {
        if (alphabet_size_ == 256) throw std::logic_error("PatternBank: alphabet overflow");
        symbol_of_[c] = static_cast<std::uint8_t>(alphabet_size_++);
      }
    }
  }

  const auto blocks = block_count();
  masks_.assign(blocks * alphabet_size_ * kLanes, 0);
  high_bits_.assign(blocks * kLanes, 0);
  lengths_.assign(blocks * kLanes, 0);
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    const auto block = i / kLanes;
    const auto lane = i % kLanes;
    const auto& p = patterns_[i];
    lengths_[block * kLanes + lane] = static_cast<std::uint32_t>(p.size());
    high_bits_[block * kLanes + lane] = p.empty() ? 0 : std::uint64_t{1} << (p.size() - 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto sym = symbol_of_[static_cast<unsigned char>(p[k])];
      masks_[(block * alphabet_size_ + sym) * kLanes + lane] |= std::uint64_t{1} << k;
    }
  }
}

void PatternBank::encode(std::string_view text, std::vector<std::uint8_t>& out) const {
  out.resize(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) out[i] = symbol_of_[static_cast<unsigned char>(text[i])];
}

}  // namespace venuescope::simd
