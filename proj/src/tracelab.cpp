#include "primtrace/tracelab.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "primtrace/error.hpp"

namespace primtrace::tl {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

void antichains_from(const std::vector<unsigned>& divs, std::size_t start, std::vector<unsigned>& chosen,
                     std::vector<std::vector<unsigned>>& out) {
  if (chosen.size() >= 2) out.push_back(chosen);
  for (std::size_t i = start; i < divs.size(); ++i) {
    const unsigned d = divs[i];
    // Candidates arrive in increasing order, so only d divisible by an
    // earlier entry can break the antichain.
    const bool comparable = std::any_of(chosen.begin(), chosen.end(), [d](unsigned c) { return d % c == 0; });
    if (comparable) continue;
    chosen.push_back(d);
    antichains_from(divs, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

bool DivisorTuple::pairwise_coprime() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      if (std::gcd(entries_[i], entries_[j]) != 1) return false;
    }
  }
  return true;
}

unsigned lambda_inclusion_exclusion(std::span<const unsigned> entries) {
  const std::size_t k = entries.size();
  if (k >= 32) throw Error(Errc::invalid_argument, "lambda_inclusion_exclusion: too many entries");
  long long total = 0;
  for (u64 mask = 1; mask < (u64{1} << k); ++mask) {
    unsigned g = 0;
    int size = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        g = std::gcd(g, entries[i]);
        ++size;
      }
    }
    total += (size % 2 == 1) ? g : -static_cast<long long>(g);
  }
  return static_cast<unsigned>(total);
}

unsigned lambda_lcm_degree(std::span<const unsigned> entries) {
  std::set<u64> orders;
  for (unsigned d : entries) {
    for (u64 e : nt::divisors(d)) orders.insert(e);
  }
  u64 degree = 0;
  for (u64 e : orders) degree += nt::euler_phi(e);
  return static_cast<unsigned>(degree);
}

DivisorTuple make_divisor_tuple(unsigned n, std::vector<unsigned> entries, const TupleOptions& opts) {
  if (n < 2) throw Error(Errc::invalid_argument, "make_divisor_tuple: n must be > 1");
  const u64 min_k = opts.allow_single ? 1 : 2;
  if (entries.size() < min_k || entries.size() >= nt::sigma0(n)) {
    throw Error(Errc::k_out_of_range, "make_divisor_tuple: k=" + std::to_string(entries.size()) +
                                          " outside the admissible range for n=" + std::to_string(n));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const unsigned d = entries[i];
    if (d == 0 || d >= n || n % d != 0) {
      throw Error(Errc::not_divisor, "make_divisor_tuple: " + std::to_string(d) +
                                         " is not a proper divisor of " + std::to_string(n));
    }
    if (i > 0 && entries[i - 1] >= d) {
      throw Error(Errc::not_increasing, "make_divisor_tuple: entries must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[j] % entries[i] == 0) {
        throw Error(Errc::divisibility, "make_divisor_tuple: " + std::to_string(entries[i]) + " divides " +
                                            std::to_string(entries[j]));
      }
    }
  }

  DivisorTuple t;
  t.n_ = n;
  t.entries_ = std::move(entries);
  t.D_ = std::accumulate(t.entries_.begin(), t.entries_.end(), 0u);
  for (unsigned d : t.entries_) t.lcm_ = nt::lcm(t.lcm_, d);
  const unsigned by_gcds = lambda_inclusion_exclusion(t.entries_);
  const unsigned by_degree = lambda_lcm_degree(t.entries_);
  if (by_gcds != by_degree) {
    throw InvariantError("make_divisor_tuple: lambda formulas disagree (" + std::to_string(by_gcds) + " vs " +
                         std::to_string(by_degree) + ")");
  }
  if (by_gcds > n - nt::euler_phi(n)) throw InvariantError("make_divisor_tuple: lambda exceeds n - phi(n)");
  t.lambda_ = by_gcds;
  return t;
}

std::vector<DivisorTuple> enumerate_divisor_tuples(unsigned n) {
  std::vector<unsigned> divs;
  for (u64 d : nt::divisors(n)) {
    if (d > 1 && d < n) divs.push_back(static_cast<unsigned>(d));
  }
  std::vector<std::vector<unsigned>> chains;
  std::vector<unsigned> chosen;
  antichains_from(divs, 0, chosen, chains);
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<DivisorTuple> out;
  out.reserve(chains.size());
  for (auto& c : chains) out.push_back(make_divisor_tuple(n, std::move(c)));
  return out;
}

bool pairwise_admissible(const gf::FieldContext& ctx, std::span<const unsigned> entries,
                         std::span<const gf::FieldElement> targets) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (i == j) continue;
      const unsigned g = std::gcd(entries[i], entries[j]);
      if (gf::relative_trace(ctx, targets[i], entries[i], g) != gf::relative_trace(ctx, targets[j], entries[j], g)) {
        return false;
      }
    }
  }
  return true;
}

TraceSpec make_trace_spec(const gf::FieldContext& ctx, const DivisorTuple& tuple,
                          std::vector<gf::FieldElement> targets) {
  if (ctx.n() != tuple.n()) {
    throw Error(Errc::invalid_argument, "make_trace_spec: context degree " + std::to_string(ctx.n()) +
                                            " differs from tuple n=" + std::to_string(tuple.n()));
  }
  if (targets.size() != tuple.k()) {
    throw Error(Errc::invalid_argument, "make_trace_spec: expected " + std::to_string(tuple.k()) + " targets");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!ctx.belongs(targets[i])) {
      throw Error(Errc::invalid_argument, "make_trace_spec: target " + std::to_string(i + 1) + " malformed");
    }
    if (!gf::in_subfield(ctx, targets[i], tuple.entries()[i])) {
      throw Error(Errc::not_in_subfield, "make_trace_spec: target a_" + std::to_string(i + 1) + " is not in GF(q^" +
                                             std::to_string(tuple.entries()[i]) + ")");
    }
  }
  TraceSpec spec{tuple, std::move(targets), false};
  spec.admissible = pairwise_admissible(ctx, spec.tuple.entries(), spec.targets);
  return spec;
}

void sweep_traces(const gf::FieldContext& ctx, std::span<const unsigned> degrees,
                  const std::function<void(u32, std::span<const u32>)>& visit) {
  if (!ctx.enumerable() || ctx.size() > BigInt(~u32{0})) {
    throw Error(Errc::resource_limit, "sweep_traces: field exceeds the enumeration ceiling");
  }
  std::vector<gf::LinearMap> maps;
  for (unsigned d : degrees) maps.push_back(ctx.trace_map(d));
  const u64 count = static_cast<u64>(ctx.size());
  const std::size_t k = degrees.size();
  constexpr u64 kBatch = 4096;
  std::vector<u32> codes(kBatch);
  std::vector<std::vector<u32>> images(k, std::vector<u32>(kBatch));
  std::vector<u32> row(k);
  for (u64 first = 0; first < count; first += kBatch) {
    const std::size_t len = static_cast<std::size_t>(std::min(kBatch, count - first));
    std::iota(codes.begin(), codes.begin() + len, static_cast<u32>(first));
    for (std::size_t i = 0; i < k; ++i) {
      kernels::apply_linear_map(maps[i].view(), std::span<const u32>(codes.data(), len),
                                std::span<u32>(images[i].data(), len));
    }
    for (std::size_t e = 0; e < len; ++e) {
      for (std::size_t i = 0; i < k; ++i) row[i] = images[i][e];
      visit(codes[e], row);
    }
  }
}

namespace {

std::vector<u32> target_codes(const gf::FieldContext& ctx, const TraceSpec& spec) {
  std::vector<u32> out;
  for (const auto& a : spec.targets) out.push_back(static_cast<u32>(ctx.encode(a)));
  return out;
}

}  // namespace

std::uint64_t count_with_traces(const gf::FieldContext& ctx, const TraceSpec& spec) {
  const auto want = target_codes(ctx, spec);
  u64 count = 0;
  sweep_traces(ctx, spec.tuple.entries(), [&](u32, std::span<const u32> traces) {
    if (std::equal(traces.begin(), traces.end(), want.begin())) ++count;
  });
  return count;
}

std::vector<gf::FieldElement> enumerate_with_traces(const gf::FieldContext& ctx, const TraceSpec& spec) {
  const auto want = target_codes(ctx, spec);
  std::vector<gf::FieldElement> out;
  sweep_traces(ctx, spec.tuple.entries(), [&](u32 code, std::span<const u32> traces) {
    if (std::equal(traces.begin(), traces.end(), want.begin())) out.push_back(ctx.decode(code));
  });
  return out;
}

std::uint64_t zero_sum_tuple_count(const gf::FieldContext& ctx, const DivisorTuple& tuple, std::uint64_t ceiling) {
  if (ctx.n() != tuple.n()) throw Error(Errc::invalid_argument, "zero_sum_tuple_count: context/tuple degree mismatch");
  if (nt::pow(BigInt(ctx.q()), tuple.D()) > ceiling) {
    throw Error(Errc::resource_limit, "zero_sum_tuple_count: q^D exceeds the enumeration ceiling");
  }
  const std::size_t k = tuple.k();
  std::vector<std::vector<gf::FieldElement>> fields;
  for (unsigned d : tuple.entries()) fields.push_back(gf::subfield_elements(ctx, d));
  const std::unordered_set<gf::FieldElement, gf::ElementHash> last(fields.back().begin(), fields.back().end());

  // Odometer over x_1..x_{k-1}; x_k is forced to -(x_1 + ... + x_{k-1}).
  std::vector<std::size_t> idx(k - 1, 0);
  u64 count = 0;
  while (true) {
    gf::FieldElement sum = ctx.zero();
    for (std::size_t i = 0; i + 1 < k; ++i) sum = gf::add(ctx, sum, fields[i][idx[i]]);
    if (last.contains(gf::neg(ctx, sum))) ++count;
    std::size_t i = 0;
    while (i + 1 < k && ++idx[i] == fields[i].size()) idx[i++] = 0;
    if (i + 1 == k) break;
  }
  return count;
}

std::size_t CodesHash::operator()(const std::vector<u32>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (u32 c : v) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

FiberHistogram fiber_histogram(const gf::FieldContext& ctx, std::span<const unsigned> degrees) {
  if (!ctx.has_log_table()) throw Error(Errc::not_applicable, "fiber_histogram: context has no log table");
  const u64 order = static_cast<u64>(ctx.order());
  FiberHistogram hist;
  std::vector<u32> key(degrees.size());
  sweep_traces(ctx, degrees, [&](u32 code, std::span<const u32> traces) {
    key.assign(traces.begin(), traces.end());
    auto& stats = hist[key];
    ++stats.elements;
    if (code != 0 && std::gcd(ctx.dlog_encoded(code), order) == 1) ++stats.primitive;
  });
  return hist;
}

}  // namespace primtrace::tl
