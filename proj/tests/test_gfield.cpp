#include "doctest.h"
#include "primtrace/error.hpp"
#include "primtrace/gfield.hpp"

using namespace primtrace;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

namespace {

// Oracle: schoolbook product followed by long division by the defining
// polynomial, written independently of gfield.cpp.
gf::FieldElement slow_mul(const gf::FieldContext& ctx, const gf::FieldElement& x, const gf::FieldElement& y) {
  const u32 p = ctx.p();
  const unsigned m = ctx.m();
  std::vector<u64> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + u64{x.coeffs[i]} * y.coeffs[j]) % p;
  }
  const auto& f = ctx.defining_poly();
  for (unsigned deg = 2 * m - 1; deg >= m; --deg) {
    const u64 c = prod[deg];
    if (c == 0) continue;
    for (unsigned i = 0; i <= m; ++i) prod[deg - m + i] = (prod[deg - m + i] + (p - c) * f[i]) % p;
  }
  gf::FieldElement out;
  for (unsigned i = 0; i < m; ++i) out.coeffs.push_back(static_cast<u32>(prod[i]));
  return out;
}

gf::FieldElement slow_pow(const gf::FieldContext& ctx, gf::FieldElement x, u64 e) {
  gf::FieldElement r = ctx.one();
  for (u64 i = 0; i < e; ++i) r = slow_mul(ctx, r, x);
  return r;
}

u64 brute_order(const gf::FieldContext& ctx, const gf::FieldElement& x) {
  gf::FieldElement y = x;
  u64 k = 1;
  while (y != ctx.one()) {
    y = slow_mul(ctx, y, x);
    ++k;
  }
  return k;
}

const std::vector<std::tuple<u32, unsigned, unsigned>> kSmall = {{2, 1, 4}, {2, 2, 3}, {3, 1, 3}, {5, 1, 2}, {2, 1, 6},
                                                                  {3, 2, 2}, {7, 1, 2}, {2, 3, 2}};

}  // namespace

TEST_CASE("defining polynomials") {
  CHECK(gf::smallest_irreducible(2, 3) == std::vector<u32>{1, 1, 0, 1});
  CHECK(gf::smallest_irreducible(2, 6) == std::vector<u32>{1, 1, 0, 0, 0, 0, 1});
  CHECK(gf::smallest_irreducible(3, 2) == std::vector<u32>{1, 0, 1});
  CHECK_FALSE(gf::is_irreducible({1, 0, 1}, 2));  // x^2 + 1 = (x + 1)^2
  CHECK(gf::is_irreducible({1, 1, 1}, 2));

  // Brute force: no monic factor of degree <= m/2 divides the polynomial.
  for (auto [p, m] : std::vector<std::pair<u32, unsigned>>{{2, 4}, {2, 6}, {2, 8}, {3, 4}, {5, 3}}) {
    const auto f = gf::smallest_irreducible(p, m);
    const auto ctx = gf::build_context(p, 1, m);
    u64 roots = 0;
    for (const auto& x : gf::enumerate(ctx)) {
      if (x.coeffs[0] != 0 && std::all_of(x.coeffs.begin() + 1, x.coeffs.end(), [](u32 c) { return c == 0; })) {
        // constant: evaluate f(c) mod p
        u64 v = 0, pw = 1;
        for (u32 c : f) {
          v = (v + c * pw) % p;
          pw = pw * x.coeffs[0] % p;
        }
        roots += v == 0;
      }
    }
    CHECK(roots == 0);
    // Irreducible iff GF(p)[x]/f is a field: every nonzero element invertible.
    for (const auto& x : gf::enumerate(ctx)) {
      if (x.is_zero()) continue;
      CHECK(gf::mul(ctx, x, gf::inv(ctx, x)) == ctx.one());
    }
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(gf::build_context(6, 1, 2), Error);
  try {
    gf::build_context(6, 1, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_prime);
  }
  const auto ctx = gf::build_context(2, 3, 2);
  CHECK(ctx.q() == 8);
  CHECK(ctx.m() == 6);
  CHECK(ctx.size() == 64);
  CHECK(ctx.descriptor() == "2,3,2;1,1,0,0,0,0,1");
}

TEST_CASE("multiplication against the schoolbook oracle") {
  for (auto [p, s, n] : kSmall) {
    const auto ctx = gf::build_context(p, s, n);
    for (const auto& x : gf::enumerate(ctx)) {
      for (u64 c = 0; c < static_cast<u64>(ctx.size()); c += 3) {
        const auto y = ctx.decode(c);
        CHECK(gf::mul(ctx, x, y) == slow_mul(ctx, x, y));
      }
    }
  }
}

TEST_CASE("field axioms on GF(27)") {
  const auto ctx = gf::build_context(3, 1, 3);
  const auto elems = std::vector<gf::FieldElement>(gf::enumerate(ctx).begin(), gf::enumerate(ctx).end());
  for (const auto& a : elems) {
    CHECK(gf::add(ctx, a, gf::neg(ctx, a)) == ctx.zero());
    CHECK(gf::sub(ctx, a, a) == ctx.zero());
    CHECK(ctx.decode(ctx.encode(a)) == a);
    for (const auto& b : elems) {
      CHECK(gf::mul(ctx, a, b) == gf::mul(ctx, b, a));
      const auto& c = elems[(ctx.encode(a) * 7 + ctx.encode(b)) % elems.size()];
      CHECK(gf::mul(ctx, a, gf::add(ctx, b, c)) == gf::add(ctx, gf::mul(ctx, a, b), gf::mul(ctx, a, c)));
    }
  }
  CHECK(gf::pow(ctx, ctx.zero(), 0) == ctx.one());
  CHECK(gf::pow(ctx, ctx.zero(), 5) == ctx.zero());
}

TEST_CASE("Frobenius and traces against definitional sums") {
  for (auto [p, s, n] : kSmall) {
    const auto ctx = gf::build_context(p, s, n);
    const u64 q = ctx.q();
    for (const auto& x : gf::enumerate(ctx)) {
      CHECK(gf::frobenius(ctx, x, 1) == slow_pow(ctx, x, q));
      CHECK(ctx.frobenius_map().apply(x) == gf::frobenius(ctx, x, 1));
      for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        // Tr_{n/d}(x) = sum_{i < n/d} x^(q^(d i))
        gf::FieldElement want = ctx.zero();
        gf::FieldElement term = x;
        for (unsigned i = 0; i < n / d; ++i) {
          want = gf::add(ctx, want, term);
          for (unsigned r = 0; r < d; ++r) term = slow_pow(ctx, term, q);
        }
        CHECK(gf::trace(ctx, x, d) == want);
        CHECK(ctx.trace_map(d).apply(x) == want);
        CHECK(gf::in_subfield(ctx, want, d));
      }
    }
  }
}

TEST_CASE("subfields") {
  const auto ctx = gf::build_context(2, 1, 12);
  for (unsigned d : {1u, 2u, 3u, 4u, 6u, 12u}) {
    const auto sub = gf::subfield_elements(ctx, d);
    CHECK(sub.size() == (u64{1} << d));
    for (const auto& x : sub) CHECK(gf::pow(ctx, x, BigInt(u64{1} << d)) == x);
    const auto g = gf::subfield_generator(ctx, d);
    CHECK(gf::in_subfield(ctx, g, d));
    CHECK(gf::multiplicative_order(ctx, g) == (u64{1} << d) - 1);
  }
  // relative trace GF(2^6) -> GF(2^2) agrees with composing traces down to GF(2)
  for (const auto& x : gf::subfield_elements(ctx, 6)) {
    CHECK(gf::relative_trace(ctx, gf::relative_trace(ctx, x, 6, 2), 2, 1) == gf::relative_trace(ctx, x, 6, 1));
  }
}

TEST_CASE("primitivity against brute-force orders") {
  for (auto [p, s, n] : kSmall) {
    const auto ctx = gf::build_context(p, s, n);
    const u64 order = static_cast<u64>(ctx.order());
    u64 primitive = 0;
    for (const auto& x : gf::enumerate(ctx)) {
      if (x.is_zero()) {
        CHECK_FALSE(gf::is_primitive(ctx, x));
        continue;
      }
      const bool want = brute_order(ctx, x) == order;
      CHECK(gf::is_primitive(ctx, x) == want);
      CHECK(gf::is_primitive_by_powers(ctx, x) == want);
      CHECK(gf::multiplicative_order(ctx, x) == brute_order(ctx, x));
      primitive += want;
      CHECK(ctx.exp_encoded(ctx.dlog(x)) == ctx.encode(x));
    }
    CHECK(primitive == nt::euler_phi(order));
    REQUIRE(ctx.generator());
    CHECK(gf::is_primitive_by_powers(ctx, *ctx.generator()));
  }
}

TEST_CASE("large contexts work without tables") {
  const auto ctx = gf::build_context(2, 1, 60);
  CHECK_FALSE(ctx.has_log_table());
  CHECK_FALSE(ctx.enumerable());
  CHECK_THROWS_AS(gf::enumerate(ctx), Error);
  const auto g = gf::subfield_generator(ctx, 60);
  CHECK(gf::is_primitive(ctx, g));
  const auto x = ctx.x_class();
  CHECK(gf::frobenius(ctx, x, 60) == x);
  CHECK(gf::in_subfield(ctx, gf::trace(ctx, x, 4), 4));
}

TEST_CASE("map_all_elements batches cover every encoding") {
  const auto ctx = gf::build_context(3, 1, 8);
  const auto map = ctx.trace_map(2);
  u64 seen = 0;
  bool ok = true;
  gf::map_all_elements(ctx, map, [&](u32 first, std::span<const u32> images) {
    for (std::size_t i = 0; i < images.size(); i += 97) {
      ok = ok && images[i] == ctx.encode(gf::trace(ctx, ctx.decode(first + i), 2));
    }
    seen += images.size();
  });
  CHECK(ok);
  CHECK(seen == 6561);
}
