// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <vector>

#include "primtrace/error.hpp"
#include "primtrace/kernels.hpp"

namespace primtrace::kernels {

namespace {

// Exact for 0 <= v < 2^52: the reciprocal estimate is off by at most one.
inline void divmod_pd(__m256d v, __m256d p, __m256d inv_p, __m256d& quot, __m256d& rem) {
  quot = _mm256_floor_pd(_mm256_mul_pd(v, inv_p));
  rem = _mm256_fnmadd_pd(quot, p, v);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d neg = _mm256_cmp_pd(rem, zero, _CMP_LT_OQ);
  rem = _mm256_add_pd(rem, _mm256_and_pd(neg, p));
  quot = _mm256_sub_pd(quot, _mm256_and_pd(neg, _mm256_set1_pd(1.0)));
  const __m256d big = _mm256_cmp_pd(rem, p, _CMP_GE_OQ);
  rem = _mm256_sub_pd(rem, _mm256_and_pd(big, p));
  quot = _mm256_add_pd(quot, _mm256_and_pd(big, _mm256_set1_pd(1.0)));
}

inline __m256d load_u32x4(const std::uint32_t* src) {
  const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src));
  const __m128i flipped = _mm_xor_si128(raw, _mm_set1_epi32(static_cast<int>(0x80000000u)));
  return _mm256_add_pd(_mm256_cvtepi32_pd(flipped), _mm256_set1_pd(2147483648.0));
}

inline void store_u32x4(std::uint32_t* dst, __m256d v) {
  const __m128i shifted = _mm256_cvttpd_epi32(_mm256_sub_pd(v, _mm256_set1_pd(2147483648.0)));
  const __m128i raw = _mm_xor_si128(shifted, _mm_set1_epi32(static_cast<int>(0x80000000u)));
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), raw);
}

}  // namespace

void apply_linear_map_avx2(const LinearMapView& map, std::span<const std::uint32_t> in,
                           std::span<std::uint32_t> out) {
  if (out.size() < in.size()) throw Error(Errc::invalid_argument, "apply_linear_map: short output");
  if (!avx2_applicable(map)) {
    apply_linear_map_scalar(map, in, out);
    return;
  }
  const unsigned m = map.m;
  std::vector<double> entries(map.entries.begin(), map.entries.end());
  struct Lane {
    __m256d v;
  };
  std::vector<Lane> digits(m);
  const __m256d p = _mm256_set1_pd(static_cast<double>(map.p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(map.p));

  const std::size_t full = in.size() / 4 * 4;
  for (std::size_t e = 0; e < full; e += 4) {
    __m256d v = load_u32x4(in.data() + e);
    for (unsigned j = 0; j < m; ++j) {
      __m256d quot;
      divmod_pd(v, p, inv_p, quot, digits[j].v);
      v = quot;
    }
    __m256d encoded = _mm256_setzero_pd();
    for (unsigned i = m; i-- > 0;) {
      const double* row = entries.data() + std::size_t{i} * m;
      __m256d acc = _mm256_setzero_pd();
      for (unsigned j = 0; j < m; ++j) acc = _mm256_fmadd_pd(_mm256_set1_pd(row[j]), digits[j].v, acc);
      __m256d quot, rem;
      divmod_pd(acc, p, inv_p, quot, rem);
      encoded = _mm256_fmadd_pd(encoded, p, rem);
    }
    store_u32x4(out.data() + e, encoded);
  }
  if (full < in.size()) {
    apply_linear_map_scalar(map, in.subspan(full), out.subspan(full));
  }
}

}  // namespace primtrace::kernels
