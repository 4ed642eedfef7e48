#include <immintrin.h>

#include <cstring>

#include "hypca/kernels.hpp"

namespace hypca::kernels {

namespace {

inline __m256i gather_bytes(const std::uint8_t* base, __m256i idx) {
  const __m256i lo = _mm256_set1_epi32(0xFF);
  return _mm256_and_si256(
      _mm256_i32gather_epi32(reinterpret_cast<const int*>(base), idx, 1), lo);
}

}  // namespace

void next_states_avx2(const LookupBatch& b) {
  const __m256i radix = _mm256_set1_epi32(static_cast<int>(b.radix));
  const __m256i pick = _mm256_setr_epi8(0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
                                        0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
  std::size_t i = 0;
  for (; i + 8 <= b.n; i += 8) {
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.cells + i));
    __m256i idx = gather_bytes(b.states, c);
    for (std::size_t k = 0; k < 5; ++k) {
      const __m256i nb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.nbr + k * b.n + i));
      idx = _mm256_add_epi32(_mm256_mullo_epi32(idx, radix), gather_bytes(b.states, nb));
    }
    const __m256i packed = _mm256_shuffle_epi8(gather_bytes(b.lut, idx), pick);
    const std::uint32_t lo = static_cast<std::uint32_t>(_mm256_extract_epi32(packed, 0));
    const std::uint32_t hi = static_cast<std::uint32_t>(_mm256_extract_epi32(packed, 4));
    std::memcpy(b.out + i, &lo, 4);
    std::memcpy(b.out + i + 4, &hi, 4);
  }
  for (; i < b.n; ++i) {
    std::uint32_t idx = b.states[b.cells[i]];
    for (std::size_t k = 0; k < 5; ++k) idx = idx * b.radix + b.states[b.nbr[k * b.n + i]];
    b.out[i] = b.lut[idx];
  }
}

}  // namespace hypca::kernels
