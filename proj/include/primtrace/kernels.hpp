#pragma once

#include <cstdint>
#include <span>

// Batch kernels for the exhaustive sweeps. Elements travel as their base-p
// integer encodings (sum of coeffs[i] * p^i), which must fit in 32 bits.
namespace primtrace::kernels {

// Row-major m x m matrix over GF(p): out_i = sum_j entries[i*m + j] * x_j.
struct LinearMapView {
  std::uint32_t p = 2;
  unsigned m = 1;
  std::span<const std::uint32_t> entries;
};

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool avx2_available();
Isa best_isa();

// Whether the vector path can represent this map exactly in double lanes.
bool avx2_applicable(const LinearMapView& map);

void apply_linear_map_scalar(const LinearMapView& map, std::span<const std::uint32_t> in,
                             std::span<std::uint32_t> out);

#if defined(__x86_64__) || defined(_M_X64)
#define PRIMTRACE_HAVE_AVX2_KERNELS 1
void apply_linear_map_avx2(const LinearMapView& map, std::span<const std::uint32_t> in,
                           std::span<std::uint32_t> out);
#endif

// Dispatches to the fastest variant the CPU supports (or `isa` if given
// and usable). `in` and `out` may alias.
void apply_linear_map(const LinearMapView& map, std::span<const std::uint32_t> in,
                      std::span<std::uint32_t> out);
void apply_linear_map(const LinearMapView& map, std::span<const std::uint32_t> in,
                      std::span<std::uint32_t> out, Isa isa);

}  // namespace primtrace::kernels
