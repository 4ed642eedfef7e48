#include <cstdlib>
#include <cstring>

#include "hypca/kernels.hpp"

namespace hypca::kernels {

void next_states_scalar(const LookupBatch& b) {
  const std::uint32_t r = b.radix;
  for (std::size_t i = 0; i < b.n; ++i) {
    std::uint32_t idx = b.states[b.cells[i]];
    for (std::size_t k = 0; k < 5; ++k) idx = idx * r + b.states[b.nbr[k * b.n + i]];
    b.out[i] = b.lut[idx];
  }
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(HYPCA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa chosen = [] {
    const char* env = std::getenv("HYPCA_KERNEL");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return chosen;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void next_states(const LookupBatch& b, Isa isa) {
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) next_states_avx2(b);
  else next_states_scalar(b);
}

#if !defined(HYPCA_HAVE_AVX2)
void next_states_avx2(const LookupBatch& b) { next_states_scalar(b); }
#endif

}  // namespace hypca::kernels
