#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "primtrace/gfield.hpp"

namespace primtrace::tl {

struct TupleOptions {
  // Admit k = 1 (single-trace mode used to reproduce the one-trace theorem).
  bool allow_single = false;
};

// A validated antichain (d_1 < ... < d_k) of proper divisors of n.
class DivisorTuple {
 public:
  unsigned n() const { return n_; }
  const std::vector<unsigned>& entries() const { return entries_; }
  std::size_t k() const { return entries_.size(); }
  unsigned D() const { return D_; }
  unsigned lambda() const { return lambda_; }
  std::uint64_t lcm_value() const { return lcm_; }
  bool pairwise_coprime() const;

  bool operator==(const DivisorTuple&) const = default;

 private:
  friend DivisorTuple make_divisor_tuple(unsigned n, std::vector<unsigned> entries, const TupleOptions& opts);
  unsigned n_ = 0;
  std::vector<unsigned> entries_;
  unsigned D_ = 0;
  unsigned lambda_ = 0;
  std::uint64_t lcm_ = 1;
};

// Throws Error with not_divisor / divisibility / k_out_of_range /
// not_increasing.
DivisorTuple make_divisor_tuple(unsigned n, std::vector<unsigned> entries, const TupleOptions& opts = {});

// sum d_i + sum_{i>=2} (-1)^(i+1) sum_{l_1<...<l_i} gcd(d_l_1, ..., d_l_i)
unsigned lambda_inclusion_exclusion(std::span<const unsigned> entries);

// deg lcm(x^d_1 - 1, ..., x^d_k - 1): sum of phi(e) over every e dividing
// at least one d_i (x^d - 1 is the product of Phi_e for e | d).
unsigned lambda_lcm_degree(std::span<const unsigned> entries);

// Every tuple in Lambda_k(n) for 1 < k < sigma0(n), ordered by (k, entries).
std::vector<DivisorTuple> enumerate_divisor_tuples(unsigned n);

struct TraceSpec {
  DivisorTuple tuple;
  std::vector<gf::FieldElement> targets;
  bool admissible = false;
};

// Throws Error{not_in_subfield} naming the offending index.
TraceSpec make_trace_spec(const gf::FieldContext& ctx, const DivisorTuple& tuple,
                          std::vector<gf::FieldElement> targets);

// Pairwise identities Tr_{d_i/g}(a_i) = Tr_{d_j/g}(a_j), g = gcd(d_i, d_j).
// Entries may come in any order.
bool pairwise_admissible(const gf::FieldContext& ctx, std::span<const unsigned> entries,
                         std::span<const gf::FieldElement> targets);

// Visits every element with its k trace images (as codes), batched through
// the linear-map kernels. Requires an enumerable context with p^m < 2^32.
void sweep_traces(const gf::FieldContext& ctx, std::span<const unsigned> degrees,
                  const std::function<void(std::uint32_t code, std::span<const std::uint32_t> traces)>& visit);

std::uint64_t count_with_traces(const gf::FieldContext& ctx, const TraceSpec& spec);
std::vector<gf::FieldElement> enumerate_with_traces(const gf::FieldContext& ctx, const TraceSpec& spec);

// Zero-sum count over GF(q^d_1) x ... x GF(q^d_k).
std::uint64_t zero_sum_tuple_count(const gf::FieldContext& ctx, const DivisorTuple& tuple,
                                   std::uint64_t ceiling = std::uint64_t{1} << 22);

struct CodesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
};

struct FiberStats {
  std::uint64_t elements = 0;
  std::uint64_t primitive = 0;
};

// One exhaustive pass: trace-image tuple -> fiber size and primitive count.
// Needs the context log table for the primitive counts.
using FiberHistogram = std::unordered_map<std::vector<std::uint32_t>, FiberStats, CodesHash>;
FiberHistogram fiber_histogram(const gf::FieldContext& ctx, std::span<const unsigned> degrees);

}  // namespace primtrace::tl
