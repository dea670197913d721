#include <cstdlib>
#include <stdexcept>
#include <string>

#include "venuescope/edit_distance.hpp"

namespace venuescope::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(VENUESCOPE_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(VENUESCOPE_HAVE_NEON_KERNEL)
      return true;  // Advanced SIMD is mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  Isa best = Isa::scalar;
  if (isa_available(Isa::avx2)) best = Isa::avx2;
  else if (isa_available(Isa::neon)) best = Isa::neon;
  if (const char* forced = std::getenv("VENUESCOPE_ISA")) {
    const std::string_view f(forced);
    for (const auto isa : {Isa::scalar, Isa::avx2, Isa::neon})
      if (f == isa_name(isa) && isa_available(isa)) return isa;
  }
  return best;
}

void batch_edit_distance(const PatternBank& bank, std::size_t first_block, std::size_t last_block,
                         std::string_view text, std::span<std::uint32_t> out, Isa isa) {
  if (last_block > bank.block_count() || first_block > last_block)
    throw std::out_of_range("batch_edit_distance: block range");
  if (out.size() < (last_block - first_block) * PatternBank::kLanes)
    throw std::invalid_argument("batch_edit_distance: output span too small");
  if (!isa_available(isa)) throw std::invalid_argument("batch_edit_distance: ISA not available on this host");
  thread_local std::vector<std::uint8_t> encoded;
  bank.encode(text, encoded);
  switch (isa) {
    case Isa::scalar:
      kernels::batch_scalar(bank, first_block, last_block, encoded, out.data());
      return;
    case Isa::avx2:
#if defined(VENUESCOPE_HAVE_AVX2_KERNEL)
      kernels::batch_avx2(bank, first_block, last_block, encoded, out.data());
#endif
      return;
    case Isa::neon:
#if defined(VENUESCOPE_HAVE_NEON_KERNEL)
      kernels::batch_neon(bank, first_block, last_block, encoded, out.data());
#endif
      return;
  }
}

}  // namespace venuescope::simd
