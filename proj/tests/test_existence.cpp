#include "doctest.h"
#include "json.hpp"
#include "primtrace/error.hpp"
#include "primtrace/existence.hpp"

using namespace primtrace;
using ex::Reason;
using ex::Status;
using u64 = std::uint64_t;

namespace {

tl::DivisorTuple T(unsigned n, std::vector<unsigned> d) { return tl::make_divisor_tuple(n, std::move(d)); }

}  // namespace

TEST_CASE("main inequality on the worked examples") {
  const auto yes = ex::check_main_inequality(2, T(30, {2, 3, 5}));
  CHECK(yes.status == Status::Exists);
  CHECK(yes.reason == Reason::MainInequality);
  CHECK(yes.evidence.lhs.find("=128") != std::string::npos);
  CHECK(yes.evidence.rhs == "W=64");
  CHECK(yes.evidence.w_mode == ex::WMode::exact_w);

  const auto no = ex::check_main_inequality(2, T(36, {4, 9}));
  CHECK(no.status == Status::Inconclusive);
  CHECK(no.evidence.rhs == "W=256");

  CHECK_THROWS_AS(ex::check_main_inequality(6, T(30, {2, 3, 5})), Error);
}

TEST_CASE("main inequality with a partial factorization stays sound") {
  // A tiny budget forces the upper bound on W; the verdict may weaken to
  // Inconclusive but never flips a failing case to Exists.
  ex::MainOptions opts{nt::FactorOptions{4}, true};
  for (u64 q : {2, 3, 5}) {
    const auto exact = ex::check_main_inequality(q, T(30, {5, 6}));
    const auto bounded = ex::check_main_inequality(q, T(30, {5, 6}), opts);
    if (bounded.status == Status::Exists) CHECK(exact.status == Status::Exists);
  }
}

TEST_CASE("lcm criterion") {
  CHECK(ex::check_lcm_criterion(T(12, {2, 3})).status == Status::Exists);
  CHECK(ex::check_lcm_criterion(T(12, {3, 4})).status == Status::Inconclusive);
}

TEST_CASE("sufficient inequality") {
  CHECK_THROWS_AS(ex::sufficient_inequality_sides(2, T(30, {6, 10, 15}), {}), Error);
  CHECK_THROWS_AS(ex::sufficient_inequality_sides(2, T(77, {7, 11}), ex::BoundParams{0}), Error);
  const auto s = ex::sufficient_inequality_sides(2, T(77, {7, 11}), ex::BoundParams{4});
  CHECK(s.lhs == doctest::Approx(21.5));
  CHECK(s.holds);
  // a supplied c overrides the computed one
  const auto loose = ex::sufficient_inequality_sides(2, T(77, {7, 11}), ex::BoundParams{4, 4.9});
  CHECK(loose.rhs == doctest::Approx(19.25 + std::log2(4.9)));
}

TEST_CASE("tail thresholds") {
  CHECK(ex::tail_threshold(T(20, {4, 5}))->loglog_q0 == doctest::Approx(6.604).epsilon(1e-3));
  CHECK(ex::tail_threshold(T(15, {3, 5}))->loglog_q0 == doctest::Approx(26.09).epsilon(1e-3));
  CHECK_FALSE(ex::tail_threshold(T(12, {3, 4})));
  CHECK_FALSE(ex::tail_threshold(T(30, {2, 3, 5})));
}

TEST_CASE("coprime-case theorem") {
  CHECK_THROWS_AS(ex::check_cop(2, T(30, {6, 10, 15})), Error);
  CHECK(ex::check_cop(2, T(12, {2, 3})).reason == Reason::LcmCriterion);
  CHECK(ex::check_cop(2, T(30, {2, 3, 5})).reason == Reason::CopCaseA);
  const auto fam = ex::check_cop(3, T(10, {2, 5}));
  CHECK(fam.status == Status::KnownException);
  CHECK(fam.reason == Reason::D1EqualsTwoFamily);
  CHECK(ex::check_cop(2, T(35, {5, 7})).reason == Reason::CopCaseB1);
  CHECK(ex::check_cop(2, T(30, {5, 6})).status == Status::Inconclusive);
  CHECK(ex::check_cop(5, T(30, {5, 6})).reason == Reason::CopCaseB1);
  CHECK(ex::check_cop(2, T(44, {4, 11})).reason == Reason::CopCaseB2);
  CHECK(ex::check_cop(3, T(36, {4, 9})).reason == Reason::CopCaseB2);
  CHECK(ex::check_cop(2, T(36, {4, 9})).status == Status::Inconclusive);
  CHECK(ex::check_cop(2, T(114, {3, 38})).reason == Reason::CopCaseB3);
  CHECK(ex::check_cop(2, T(12, {3, 4})).status == Status::Inconclusive);
}

TEST_CASE("known exceptions agree with exhaustive search") {
  const auto ctx = gf::build_context(2, 1, 6);
  const auto tuple = T(6, {2, 3});
  for (const auto& a : gf::subfield_elements(ctx, 2)) {
    for (const auto& b : gf::subfield_elements(ctx, 3)) {
      const auto spec = tl::make_trace_spec(ctx, tuple, {a, b});
      if (!spec.admissible) continue;
      const auto ke = ex::known_exception(ctx, spec);
      if (!ke) continue;
      u64 primitive = 0;
      for (const auto& x : tl::enumerate_with_traces(ctx, spec)) primitive += gf::is_primitive(ctx, x);
      CHECK(primitive == 0);
      CHECK(ke->reason == (a.is_zero() ? Reason::CohenException : Reason::D1EqualsTwoFamily));
    }
  }
}

TEST_CASE("decision chain order") {
  const auto chain = ex::decide(2, T(30, {2, 3, 5}));
  REQUIRE(chain.trail.size() == 2);
  CHECK(chain.trail[0].reason == Reason::LcmCriterion);
  CHECK(chain.final.reason == Reason::MainInequality);
  const auto inc = ex::decide(2, T(36, {4, 9}));
  CHECK(inc.final.status == Status::Inconclusive);
  CHECK(inc.trail.size() == 3);
}

TEST_CASE("table 1") {
  const auto& rows = ex::table1_rows();
  REQUIRE(rows.size() == 36);
  CHECK(ex::table1_row_minimum(rows[23]) == std::pair<u64, unsigned>{277, 9});
  CHECK(ex::table1_row_minimum(rows[25]) == std::pair<u64, unsigned>{2, 115});
  CHECK(ex::table1_row_minimum(rows[4]) == std::pair<u64, unsigned>{2, 17});
  CHECK(ex::table1_row_minimum(rows[24]).first >= 20'390'000);
  const auto report = ex::verify_table1();
  CHECK(report.rows.size() == 36);
  CHECK(report.all_pass());
}

TEST_CASE("small cases and report formats") {
  const auto report = ex::verify_small_cases();
  CHECK(report.all_pass());
  int main_rows = 0;
  for (const auto& r : report.rows) {
    if (r.row_id.rfind("n30-", 0) == 0 || r.row_id.rfind("n42-", 0) == 0) {
      ++main_rows;
      CHECK(r.verdict == "holds");
    }
  }
  CHECK(main_rows == 12);

  const std::string text = report.to_text();
  const auto first = text.substr(0, text.find('\n'));
  CHECK(std::count(first.begin(), first.end(), '|') == 4);

  const auto j = nlohmann::json::parse(report.to_json());
  for (const char* key : {"q", "n", "d", "a_param", "lhs", "rhs", "verdict", "reason"}) {
    CHECK(j["rows"][0].contains(key));
  }
}
