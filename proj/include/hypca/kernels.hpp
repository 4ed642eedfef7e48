#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hypca::kernels {

enum class Isa { Scalar, Avx2 };

bool isa_available(Isa isa);
/// Best available ISA; `HYPCA_KERNEL=scalar` in the environment forces scalar.
Isa best_isa();
std::string_view isa_name(Isa isa);

/// Batched next-state lookup through a dense rule table.
///
///   idx(i) = ((((s[c_i]*R + s[n0_i])*R + s[n1_i])*R + ...)*R + s[n4_i]
///   out[i] = lut[idx(i)]
///
/// `nbr` is slot-major: nbr[k*n + i] is neighbour k of cell i. `states` and
/// `lut` must have 3 readable bytes past their last index.
struct LookupBatch {
  const std::uint8_t* states = nullptr;
  const std::int32_t* cells = nullptr;
  const std::int32_t* nbr = nullptr;
  std::size_t n = 0;
  const std::uint8_t* lut = nullptr;
  std::uint32_t radix = 0;
  std::uint8_t* out = nullptr;
};

void next_states_scalar(const LookupBatch& b);
void next_states_avx2(const LookupBatch& b);
void next_states(const LookupBatch& b, Isa isa);

}  // namespace hypca::kernels
