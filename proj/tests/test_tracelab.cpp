#include <set>

#include "doctest.h"
#include "primtrace/error.hpp"
#include "primtrace/tracelab.hpp"

using namespace primtrace;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_argument;
}

// |union of the subgroups of order d_i in Z/L|, the number of distinct
// complex roots of the x^d_i - 1.
unsigned union_of_root_groups(const std::vector<unsigned>& d) {
  u64 L = 1;
  for (unsigned x : d) L = nt::lcm(L, x);
  unsigned count = 0;
  for (u64 j = 0; j < L; ++j) {
    bool hit = false;
    for (unsigned x : d) hit = hit || (j * x) % L == 0;
    count += hit;
  }
  return count;
}

}  // namespace

TEST_CASE("tuple validation") {
  CHECK(code_of([] { tl::make_divisor_tuple(6, {2, 4}); }) == Errc::not_divisor);
  CHECK(code_of([] { tl::make_divisor_tuple(6, {2, 6}); }) == Errc::not_divisor);
  CHECK(code_of([] { tl::make_divisor_tuple(12, {2, 4}); }) == Errc::divisibility);
  CHECK(code_of([] { tl::make_divisor_tuple(12, {3, 2}); }) == Errc::not_increasing);
  CHECK(code_of([] { tl::make_divisor_tuple(6, {2}); }) == Errc::k_out_of_range);
  CHECK(code_of([] { tl::make_divisor_tuple(6, {1, 2, 3, 6}); }) == Errc::k_out_of_range);
  CHECK(tl::make_divisor_tuple(6, {3}, tl::TupleOptions{true}).lambda() == 3);
  CHECK(tl::enumerate_divisor_tuples(4).empty());
  CHECK(tl::enumerate_divisor_tuples(27).empty());
}

TEST_CASE("lambda on worked tuples") {
  const auto a = tl::make_divisor_tuple(30, {6, 10, 15});
  CHECK(a.lambda() == 22);
  CHECK(a.D() == 31);
  CHECK(a.lcm_value() == 30);
  CHECK(tl::make_divisor_tuple(30, {2, 3, 5}).lambda() == 8);
  CHECK(tl::make_divisor_tuple(12, {3, 4}).lambda() == 6);
  CHECK(tl::make_divisor_tuple(12, {3, 4}).pairwise_coprime());
  CHECK_FALSE(a.pairwise_coprime());
}

TEST_CASE("lambda against the root-of-unity union oracle") {
  for (unsigned n = 2; n <= 60; ++n) {
    for (const auto& t : tl::enumerate_divisor_tuples(n)) {
      CHECK(t.lambda() == union_of_root_groups(t.entries()));
    }
  }
}

TEST_CASE("antichain enumeration against brute-force subsets") {
  for (unsigned n : {6u, 12u, 30u, 36u, 60u}) {
    std::vector<unsigned> divs;
    for (unsigned d = 2; d < n; ++d) {
      if (n % d == 0) divs.push_back(d);
    }
    std::set<std::vector<unsigned>> brute;
    for (u64 mask = 0; mask < (u64{1} << divs.size()); ++mask) {
      std::vector<unsigned> pick;
      for (std::size_t i = 0; i < divs.size(); ++i) {
        if (mask >> i & 1) pick.push_back(divs[i]);
      }
      if (pick.size() < 2) continue;
      bool antichain = true;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        for (std::size_t j = i + 1; j < pick.size(); ++j) antichain = antichain && pick[j] % pick[i] != 0;
      }
      if (antichain) brute.insert(pick);
    }
    std::set<std::vector<unsigned>> got;
    for (const auto& t : tl::enumerate_divisor_tuples(n)) got.insert(t.entries());
    CHECK(got == brute);
  }
  const auto six = tl::enumerate_divisor_tuples(6);
  REQUIRE(six.size() == 1);
  CHECK(six[0].entries() == std::vector<unsigned>{2, 3});
}

TEST_CASE("trace specs and admissibility") {
  const auto ctx = gf::build_context(2, 1, 12);
  const auto tuple = tl::make_divisor_tuple(12, {4, 6});
  // target outside GF(2^4)
  const auto bad = gf::subfield_generator(ctx, 6);
  CHECK(code_of([&] { tl::make_trace_spec(ctx, tuple, {bad, ctx.zero()}); }) == Errc::not_in_subfield);

  // Admissible iff the fiber is non-empty (oracle: exhaustive trace images).
  std::set<std::pair<u64, u64>> images;
  for (const auto& x : gf::enumerate(ctx)) {
    images.emplace(ctx.encode(gf::trace(ctx, x, 4)), ctx.encode(gf::trace(ctx, x, 6)));
  }
  u64 admissible = 0;
  for (const auto& a : gf::subfield_elements(ctx, 4)) {
    for (const auto& b : gf::subfield_elements(ctx, 6)) {
      const auto spec = tl::make_trace_spec(ctx, tuple, {a, b});
      CHECK(spec.admissible == images.contains({ctx.encode(a), ctx.encode(b)}));
      std::vector<unsigned> rev{6, 4};
      std::vector<gf::FieldElement> rev_t{b, a};
      CHECK(tl::pairwise_admissible(ctx, rev, rev_t) == spec.admissible);
      admissible += spec.admissible;
    }
  }
  CHECK(admissible == images.size());
}

TEST_CASE("fiber counts and zero sums") {
  const auto ctx = gf::build_context(2, 1, 6);
  const auto tuple = tl::make_divisor_tuple(6, {2, 3});
  const auto spec = tl::make_trace_spec(ctx, tuple, {ctx.zero(), ctx.zero()});
  CHECK(spec.admissible);
  CHECK(tl::count_with_traces(ctx, spec) == 4);
  const auto fiber = tl::enumerate_with_traces(ctx, spec);
  CHECK(fiber.size() == 4);
  for (const auto& x : fiber) {
    CHECK(gf::trace(ctx, x, 2).is_zero());
    CHECK(gf::trace(ctx, x, 3).is_zero());
  }
  CHECK(tl::zero_sum_tuple_count(ctx, tuple) == 2);

  const std::vector<unsigned> deg{2, 3};
  const auto hist = tl::fiber_histogram(ctx, deg);
  u64 total = 0, primitive = 0;
  for (const auto& [key, stats] : hist) {
    total += stats.elements;
    primitive += stats.primitive;
    CHECK(stats.elements == 4);
  }
  CHECK(total == 64);
  CHECK(primitive == nt::euler_phi(63));
}
