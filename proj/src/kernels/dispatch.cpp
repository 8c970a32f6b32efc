#include <cmath>

#include "primtrace/kernels.hpp"

namespace primtrace::kernels {

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#ifdef PRIMTRACE_HAVE_AVX2_KERNELS
  static const bool available = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return available;
#else
  return false;
#endif
}

Isa best_isa() { return avx2_available() ? Isa::avx2 : Isa::scalar; }

bool avx2_applicable(const LinearMapView& map) {
  // Accumulators hold up to m*(p-1)^2 and must stay exact in a double.
  const double bound = static_cast<double>(map.m) * std::pow(static_cast<double>(map.p - 1), 2.0);
  return bound < 4503599627370496.0;  // 2^52
}

void apply_linear_map(const LinearMapView& map, std::span<const std::uint32_t> in,
                      std::span<std::uint32_t> out) {
  apply_linear_map(map, in, out, best_isa());
}

void apply_linear_map(const LinearMapView& map, std::span<const std::uint32_t> in,
                      std::span<std::uint32_t> out, Isa isa) {
#ifdef PRIMTRACE_HAVE_AVX2_KERNELS
  if (isa == Isa::avx2 && avx2_available() && avx2_applicable(map)) {
    apply_linear_map_avx2(map, in, out);
    return;
  }
#endif
  apply_linear_map_scalar(map, in, out);
}

}  // namespace primtrace::kernels
