#include <set>

#include "doctest.h"
#include "primtrace/charsum.hpp"
#include "primtrace/error.hpp"

using namespace primtrace;
using cs::ComplexValue;
using u64 = std::uint64_t;

namespace {

bool close(ComplexValue a, ComplexValue b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("multiplicative characters") {
  const auto ctx = gf::build_context(2, 1, 4);
  const cs::CharacterTable table(ctx);
  const auto trivial = cs::mult_character(table, 1, 0);
  CHECK(trivial.trivial());
  for (const auto& x : gf::enumerate(ctx)) CHECK(close(trivial(x), x.is_zero() ? 0.0 : 1.0));
  CHECK_THROWS_AS(cs::mult_character(table, 4, 0), Error);
  CHECK_THROWS_AS(cs::mult_character(table, 5, 4), Error);

  for (u64 t : nt::divisors(15)) {
    std::set<std::vector<std::pair<long, long>>> distinct;
    for (u64 i = 0; i < nt::euler_phi(t); ++i) {
      const auto eta = cs::mult_character(table, t, i);
      std::vector<std::pair<long, long>> values;
      ComplexValue total = 0;
      for (const auto& x : gf::enumerate(ctx)) {
        const auto v = eta(x);
        values.emplace_back(std::lround(v.real() * 1e6), std::lround(v.imag() * 1e6));
        total += v;
        // exact order t: eta(x)^t = 1 on nonzero x
        if (!x.is_zero()) CHECK(close(std::pow(v, static_cast<double>(t)), 1.0, 1e-9));
      }
      distinct.insert(values);
      if (t > 1) CHECK(std::abs(total) <= 1e-8 * 16);
    }
    CHECK(distinct.size() == nt::euler_phi(t));
  }
}

TEST_CASE("additive characters") {
  const auto ctx = gf::build_context(3, 1, 3);
  const cs::CharacterTable table(ctx);
  for (const auto& x : gf::enumerate(ctx)) CHECK(close(cs::add_character(table, ctx.zero())(x), 1.0));
  for (const auto& c : gf::enumerate(ctx)) {
    const auto chi = cs::add_character(table, c);
    ComplexValue total = 0;
    for (const auto& b : gf::enumerate(ctx)) {
      total += chi(b);
      const auto& g = ctx.decode((ctx.encode(b) * 5 + 1) % 27);
      CHECK(close(chi(gf::add(ctx, b, g)), chi(b) * chi(g)));
      CHECK(close(chi.at_code(static_cast<std::uint32_t>(ctx.encode(b))), chi(b)));
    }
    if (!c.is_zero()) CHECK(std::abs(total) <= 1e-8 * 27);
  }
}

TEST_CASE("Gauss sums") {
  const auto ctx = gf::build_context(3, 1, 2);
  const cs::CharacterTable table(ctx);
  CHECK(close(cs::gauss_sum(table, cs::mult_character(table, 1, 0), ctx.zero()), 8.0));
  CHECK(close(cs::gauss_sum(table, cs::mult_character(table, 8, 1), ctx.zero()), 0.0));
  for (const auto& eta : cs::characters_of_order(table, 8)) {
    for (const auto& c : gf::enumerate(ctx)) {
      if (c.is_zero()) continue;
      CHECK(std::abs(cs::gauss_sum(table, eta, c)) == doctest::Approx(3.0).epsilon(1e-6));
    }
  }
  // Trivial eta, c != 0: the w = 0 term is missing, so the sum is -1.
  CHECK(close(cs::gauss_sum(table, cs::mult_character(table, 1, 0), ctx.one()), -1.0));
}

TEST_CASE("Gauss sums rotate with the additive parameter") {
  const auto ctx = gf::build_context(2, 1, 4);
  const cs::CharacterTable table(ctx);
  for (u64 t : nt::divisors(15)) {
    for (const auto& eta : cs::characters_of_order(table, t)) {
      const auto g1 = cs::gauss_sum(table, eta, ctx.one());
      for (const auto& s : gf::enumerate(ctx)) {
        if (s.is_zero()) continue;
        CHECK(close(cs::gauss_sum(table, eta, s), std::conj(eta(s)) * g1, 1e-9));
      }
    }
  }
}

TEST_CASE("Gauss spectrum matches direct sums") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 2}, {5, 2}, {2, 5}}) {
    const auto ctx = gf::build_context(p, 1, n);
    const cs::CharacterTable table(ctx);
    for (const auto& c : gf::enumerate(ctx)) {
      const auto spectrum = cs::gauss_sum_spectrum(table, c);
      REQUIRE(spectrum.size() == table.group_order());
      for (u64 t : nt::divisors(table.group_order())) {
        for (const auto& eta : cs::characters_of_order(table, t)) {
          CHECK(close(spectrum[eta.exponent()], cs::gauss_sum(table, eta, c), 1e-9));
        }
      }
    }
  }
}

TEST_CASE("primitive indicator") {
  const auto ctx8 = gf::build_context(2, 1, 3);
  const cs::CharacterTable t8(ctx8);
  int ones = 0;
  for (const auto& x : gf::enumerate(ctx8)) {
    const double v = cs::primitive_indicator_via_sum(t8, x);
    const double want = !x.is_zero() && gf::is_primitive(ctx8, x) ? 1 : 0;
    CHECK(std::abs(v - want) <= 1e-6);
    ones += want == 1;
  }
  CHECK(ones == 6);
  CHECK(std::abs(cs::primitive_indicator_via_sum(t8, ctx8.one())) <= 1e-6);
  CHECK(cs::primitive_indicator_via_sum(t8, ctx8.zero()) == 0.0);

  const auto ctx64 = gf::build_context(2, 1, 6);
  const cs::CharacterTable t64(ctx64);
  double total = 0;
  for (const auto& x : gf::enumerate(ctx64)) total += cs::primitive_indicator_via_sum(t64, x);
  CHECK(total == doctest::Approx(36.0).epsilon(1e-6));
}

TEST_CASE("trace indicator") {
  const auto ctx = gf::build_context(2, 1, 6);
  const cs::CharacterTable table(ctx);
  const auto ind = cs::trace_indicator_table(table, 3);
  for (const auto& a : gf::subfield_elements(ctx, 3)) {
    const auto gamma = cs::trace_reference(ctx, 3, a);
    CHECK(gf::trace(ctx, gamma, 3) == a);
    CHECK(cs::trace_indicator_via_sum(table, gamma, 3, gamma) == doctest::Approx(1.0));
    double total = 0;
    for (const auto& b : gf::enumerate(ctx)) {
      const double v = ind[ctx.encode(gf::sub(ctx, b, gamma))];
      total += v;
      CHECK(std::abs(v - (gf::trace(ctx, b, 3) == a ? 1.0 : 0.0)) <= 1e-6);
      if (ctx.encode(b) % 9 == 0) CHECK(cs::trace_indicator_via_sum(table, b, 3, gamma) == doctest::Approx(v));
    }
    CHECK(total == doctest::Approx(8.0));
  }
  CHECK_THROWS_AS(cs::trace_reference(ctx, 2, gf::subfield_generator(ctx, 3)), Error);
}

TEST_CASE("character-formula count") {
  CHECK_THROWS_AS(tl::make_divisor_tuple(4, {2}), Error);  // n = 4 admits no tuple

  for (u64 q : {2, 3}) {
    const auto ctx = gf::build_context(static_cast<std::uint32_t>(q), 1, 6);
    const cs::CharacterTable table(ctx);
    const auto tuple = tl::make_divisor_tuple(6, {2, 3});
    for (const auto& a : gf::subfield_elements(ctx, 2)) {
      for (const auto& b : gf::subfield_elements(ctx, 3)) {
        const auto spec = tl::make_trace_spec(ctx, tuple, {a, b});
        if (!spec.admissible) {
          CHECK_THROWS_AS(cs::count_via_character_formula(table, spec), Error);
          continue;
        }
        u64 exhaustive = 0;
        for (const auto& x : tl::enumerate_with_traces(ctx, spec)) exhaustive += gf::is_primitive(ctx, x);
        const auto c = cs::count_via_character_formula(table, spec);
        CHECK(c.count == doctest::Approx(static_cast<double>(exhaustive)).epsilon(1e-9));
        CHECK(std::abs(c.count - static_cast<double>(exhaustive)) <= 1e-3);
        const double qD = std::pow(static_cast<double>(q), 5);
        const double expected = a.is_zero() && b.is_zero() ? -qD : 0.0;
        CHECK(std::abs(c.residual - ComplexValue(expected)) <= 1e-6 * qD);
        CHECK(c.main_term > 0);

        const auto bound = cs::s_term_bound_check(table, spec);
        CHECK(bound.holds);
        if (q == 2) CHECK(bound.bound == doctest::Approx(256.0 * 4));
      }
    }
  }
}

TEST_CASE("character table requirements") {
  gf::ContextOptions no_tables;
  no_tables.build_log_table = false;
  const auto ctx = gf::build_context(2, 1, 4, no_tables);
  CHECK_THROWS_AS(cs::CharacterTable{ctx}, Error);
}

TEST_CASE("pairwise summation is order-stable") {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(1.0 / (i + 1));
  CHECK(cs::pairwise_sum(v) == cs::pairwise_sum(v));
  CHECK(cs::pairwise_sum(v) == doctest::Approx(7.485470860550345));
}
