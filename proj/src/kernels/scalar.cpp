#include <array>
#include <vector>

#include "primtrace/error.hpp"
#include "primtrace/kernels.hpp"

namespace primtrace::kernels {

void apply_linear_map_scalar(const LinearMapView& map, std::span<const std::uint32_t> in,
                             std::span<std::uint32_t> out) {
  if (out.size() < in.size()) throw Error(Errc::invalid_argument, "apply_linear_map: short output");
  const std::uint64_t p = map.p;
  const unsigned m = map.m;
  std::vector<std::uint64_t> digits(m);
  for (std::size_t e = 0; e < in.size(); ++e) {
    std::uint64_t v = in[e];
    for (unsigned j = 0; j < m; ++j) {
      digits[j] = v % p;
      v /= p;
    }
    std::uint64_t encoded = 0;
    for (unsigned i = m; i-- > 0;) {
      const std::uint32_t* row = map.entries.data() + std::size_t{i} * m;
      std::uint64_t acc = 0;
      for (unsigned j = 0; j < m; ++j) acc = (acc + row[j] * digits[j]) % p;
      encoded = encoded * p + acc;
    }
    out[e] = static_cast<std::uint32_t>(encoded);
  }
}

}  // namespace primtrace::kernels
