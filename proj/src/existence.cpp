#include "primtrace/existence.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "primtrace/error.hpp"

namespace primtrace::ex {

namespace {

using u64 = std::uint64_t;

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string join(const std::vector<unsigned>& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os.str();
}

// q^(n/2 - lambda) rendered exactly.
std::string lhs_string(u64 q, unsigned n, unsigned lambda) {
  const long long twice = static_cast<long long>(n) - 2LL * lambda;
  std::ostringstream os;
  os << q << "^(" << n << "/2-" << lambda << ")";
  if (twice % 2 == 0) {
    const long long e = twice / 2;
    if (e >= 0 && e * std::log10(static_cast<double>(q)) < 60) {
      os << "=" << nt::pow(BigInt(q), static_cast<u64>(e)).str();
    } else if (e < 0) {
      os << "=1/" << q << "^" << -e;
    }
  }
  return os.str();
}

double lhs_value(u64 q, unsigned n, unsigned lambda) {
  return std::pow(static_cast<double>(q), static_cast<double>(n) / 2.0 - lambda);
}

void require_coprime(const tl::DivisorTuple& tuple, const char* op) {
  if (!tuple.pairwise_coprime()) {
    throw Error(Errc::not_coprime, std::string(op) + ": entries " + join(tuple.entries()) + " are not pairwise coprime");
  }
}

ExistenceVerdict exists(Reason reason, Evidence ev) { return {Status::Exists, reason, std::move(ev)}; }
ExistenceVerdict inconclusive(Reason reason, Evidence ev) { return {Status::Inconclusive, reason, std::move(ev)}; }

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Exists: return "Exists";
    case Status::Inconclusive: return "Inconclusive";
    case Status::KnownException: return "KnownException";
  }
  return "?";
}

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::MainInequality: return "MainInequality";
    case Reason::LcmCriterion: return "LcmCriterion";
    case Reason::CopCaseA: return "CopCaseA";
    case Reason::CopCaseB1: return "CopCaseB1";
    case Reason::CopCaseB2: return "CopCaseB2";
    case Reason::CopCaseB3: return "CopCaseB3";
    case Reason::CohenException: return "CohenException";
    case Reason::D1EqualsTwoFamily: return "D1EqualsTwoFamily";
    case Reason::NoneApplicable: return "NoneApplicable";
  }
  return "?";
}

const char* wmode_name(WMode w) {
  switch (w) {
    case WMode::exact_w: return "exact_W";
    case WMode::partial_factor: return "partial_factor_bound";
    case WMode::loglog_bound: return "loglog_bound";
    case WMode::c_constant_bound: return "c_constant_bound";
  }
  return "?";
}

ExistenceVerdict check_main_inequality(u64 q, const tl::DivisorTuple& tuple, const MainOptions& opts) {
  if (!nt::prime_power_decompose(q)) {
    throw Error(Errc::not_prime_power, "check_main_inequality: " + std::to_string(q) + " is not a prime power");
  }
  const unsigned n = tuple.n();
  const unsigned lambda = tuple.lambda();
  const auto f = opts.allow_partial ? nt::factorize_power_minus_one_partial(q, n, opts.factor)
                                    : nt::factorize_power_minus_one(q, n, opts.factor);
  const bool exact = f.complete;
  const BigInt w = exact ? nt::squarefree_divisor_count(f) : nt::squarefree_divisor_upper_bound(f);

  // q^(n - 2 lambda) >= W^2, with any negative power moved across.
  const long long twice = static_cast<long long>(n) - 2LL * lambda;
  const BigInt left = twice >= 0 ? nt::pow(BigInt(q), static_cast<u64>(twice)) : BigInt(1);
  const BigInt right = w * w * (twice < 0 ? nt::pow(BigInt(q), static_cast<u64>(-twice)) : BigInt(1));
  const bool holds = left >= right;

  Evidence ev;
  ev.inequality = "q^(n/2-lambda) >= W(q^n-1)";
  ev.lhs = lhs_string(q, n, lambda);
  ev.rhs = std::string(exact ? "W=" : "W<=") + w.str();
  ev.lhs_value = lhs_value(q, n, lambda);
  ev.rhs_value = static_cast<double>(w);
  ev.w_mode = exact ? WMode::exact_w : WMode::partial_factor;
  if (!exact) ev.note = std::to_string(f.cofactors.size()) + " unfactored cofactor(s); W bounded from above";
  return holds ? exists(Reason::MainInequality, ev) : inconclusive(Reason::MainInequality, ev);
}

ExistenceVerdict check_lcm_criterion(const tl::DivisorTuple& tuple) {
  Evidence ev;
  ev.inequality = "lcm(d) < n";
  ev.lhs = "lcm=" + std::to_string(tuple.lcm_value());
  ev.rhs = "n=" + std::to_string(tuple.n());
  ev.lhs_value = static_cast<double>(tuple.lcm_value());
  ev.rhs_value = static_cast<double>(tuple.n());
  return tuple.lcm_value() < tuple.n() ? exists(Reason::LcmCriterion, ev) : inconclusive(Reason::LcmCriterion, ev);
}

SufficientSides sufficient_inequality_sides(u64 q, const tl::DivisorTuple& tuple, const BoundParams& params) {
  require_coprime(tuple, "check_sufficient_inequality");
  if (params.a < 1) throw Error(Errc::invalid_argument, "check_sufficient_inequality: a must be positive");
  SufficientSides s;
  const double n = tuple.n();
  s.c_value = params.c_value ? *params.c_value : nt::c_constant(q, tuple.n(), params.a);
  s.lhs = n / 2.0 - tuple.D() + static_cast<double>(tuple.k()) - 1.0;
  s.rhs = n / params.a + std::log(s.c_value) / std::log(static_cast<double>(q));
  s.holds = nt::holds_with_slack(s.lhs, s.rhs);
  return s;
}

bool check_sufficient_inequality(u64 q, const tl::DivisorTuple& tuple, const BoundParams& params) {
  return sufficient_inequality_sides(q, tuple, params).holds;
}

std::optional<TailThreshold> tail_threshold(const tl::DivisorTuple& tuple) {
  require_coprime(tuple, "tail_threshold");
  if (tuple.k() != 2) return std::nullopt;
  const double n = tuple.n();
  const double margin = n / 2.0 - tuple.lambda();
  if (margin <= 0) return std::nullopt;
  // (n/2 - lambda) ln q >= 0.96 n ln q / ln(n ln q)  <=>  ln ln q >= 0.96 n / margin - ln n
  TailThreshold best{0.96 * n / margin - std::log(n), "loglog"};
  const double slack8 = margin + 1.0 - n / 8.0;  // lambda = D - 1 for coprime pairs
  if (tuple.entries()[0] == 3 && slack8 > 0) {
    // log_q(4514.7) <= slack8  <=>  ln ln q >= ln(ln 4514.7 / slack8)
    const double t8 = std::log(std::log(4514.7) / slack8);
    if (t8 < best.loglog_q0) best = {t8, "c_ceiling_a8"};
  }
  return best;
}

ExistenceVerdict check_cop(u64 q, const tl::DivisorTuple& tuple) {
  require_coprime(tuple, "check_cop");
  if (auto lcm = check_lcm_criterion(tuple); lcm.decisive()) return lcm;

  const auto& d = tuple.entries();
  Evidence ev;
  ev.inequality = "coprime-case conditions";
  ev.lhs = "q=" + std::to_string(q);
  ev.rhs = "d=" + join(d);
  if (tuple.k() >= 3) return exists(Reason::CopCaseA, ev);

  const unsigned d1 = d[0], d2 = d[1];
  const double lnlnq = std::log(std::log(static_cast<double>(q)));
  const Reason case_reason = d1 >= 5 ? Reason::CopCaseB1 : d1 == 4 ? Reason::CopCaseB2 : Reason::CopCaseB3;

  if (d1 == 2) {
    ev.inequality = "trace-zero over GF(q^N), n = 2N";
    ev.witness = "a = (b, 0) with b in GF(q^2), Tr_{2/1}(b) = 0 relative to N=" + std::to_string(d2) +
                 ": every trace-zero element satisfies x^(2(q^N-1)) = 1";
    return {Status::KnownException, Reason::D1EqualsTwoFamily, ev};
  }
  if (d1 >= 5) {
    if (d1 == 5 && d2 == 6 && q < 5) {
      ev.note = "(5,6) requires q >= 5";
    } else {
      ev.note = "d1 >= 5";
      return exists(Reason::CopCaseB1, ev);
    }
  } else if (d1 == 4) {
    if (d2 >= 11) {
      ev.note = "d1 = 4, d2 >= 11";
      return exists(Reason::CopCaseB2, ev);
    }
    if (d2 >= 9 && q >= 3) {
      ev.note = "d1 = 4, d2 >= 9, q >= 3";
      return exists(Reason::CopCaseB2, ev);
    }
    if ((d2 == 5 || d2 == 7) && nt::holds_with_slack(lnlnq, 6.7)) {
      ev.note = "d1 = 4, d2 in {5,7}, ln ln q >= 6.7";
      return exists(Reason::CopCaseB2, ev);
    }
  } else if (d1 == 3) {
    if (d2 >= 38) {
      ev.note = "d1 = 3, d2 >= 38";
      return exists(Reason::CopCaseB3, ev);
    }
    if (d2 >= 5 && nt::holds_with_slack(lnlnq, 26.1)) {
      ev.note = "d1 = 3, d2 >= 5, ln ln q >= 26.1";
      return exists(Reason::CopCaseB3, ev);
    }
  }

  // The bounds behind cases A/B: the sufficient inequality with a in {4, 8}.
  for (unsigned a : {4u, 8u}) {
    const auto s = sufficient_inequality_sides(q, tuple, BoundParams{a, std::nullopt, WMode::c_constant_bound});
    if (s.holds) {
      Evidence e8;
      e8.inequality = "n/2 - sum d + k - 1 >= n/a + log_q(c)";
      e8.lhs = fmt_double(s.lhs);
      e8.rhs = fmt_double(s.rhs);
      e8.lhs_value = s.lhs;
      e8.rhs_value = s.rhs;
      e8.a_param = a;
      e8.c_value = s.c_value;
      e8.w_mode = WMode::c_constant_bound;
      return exists(case_reason, e8);
    }
  }
  if (auto tail = tail_threshold(tuple); tail && nt::holds_with_slack(lnlnq, tail->loglog_q0)) {
    Evidence et;
    et.inequality = "ln ln q >= computed q0 threshold";
    et.lhs = fmt_double(lnlnq);
    et.rhs = fmt_double(tail->loglog_q0);
    et.lhs_value = lnlnq;
    et.rhs_value = tail->loglog_q0;
    et.w_mode = tail->route == "loglog" ? WMode::loglog_bound : WMode::c_constant_bound;
    et.note = "route " + tail->route;
    return exists(case_reason, et);
  }
  return inconclusive(Reason::NoneApplicable, ev);
}

std::optional<ExistenceVerdict> known_exception(const gf::FieldContext& ctx, const tl::TraceSpec& spec) {
  const unsigned n = spec.tuple.n();
  for (std::size_t i = 0; i < spec.tuple.k(); ++i) {
    const unsigned d = spec.tuple.entries()[i];
    if (!spec.targets[i].is_zero()) continue;
    const unsigned degree = n / d;
    const BigInt base = nt::pow(BigInt(ctx.q()), d);
    Evidence ev;
    ev.inequality = "one-trace exception over GF(q^" + std::to_string(d) + ")";
    if (degree == 2) {
      const bool family = d > 1 && d % 2 == 1;
      ev.witness = "a_" + std::to_string(i + 1) + " = 0 with n = 2*" + std::to_string(d) +
                   ": trace-zero elements satisfy x^(2(q^" + std::to_string(d) + "-1)) = 1";
      return ExistenceVerdict{Status::KnownException, family ? Reason::D1EqualsTwoFamily : Reason::CohenException, ev};
    }
    if (degree == 3 && base == 4) {
      ev.witness = "a_" + std::to_string(i + 1) + " = 0 with GF(4^3) over GF(4)";
      return ExistenceVerdict{Status::KnownException, Reason::CohenException, ev};
    }
  }
  return std::nullopt;
}

ChainResult decide(u64 q, const tl::DivisorTuple& tuple, const MainOptions& opts, const gf::FieldContext* ctx,
                   const tl::TraceSpec* spec) {
  ChainResult out;
  auto record = [&](ExistenceVerdict v) {
    out.trail.push_back(v);
    if (v.decisive()) {
      out.final = std::move(v);
      return true;
    }
    return false;
  };
  if (ctx && spec) {
    if (auto ke = known_exception(*ctx, *spec); ke && record(*ke)) return out;
  }
  if (record(check_lcm_criterion(tuple))) return out;
  if (record(check_main_inequality(q, tuple, opts))) return out;
  if (tuple.pairwise_coprime() && record(check_cop(q, tuple))) return out;
  out.final = ExistenceVerdict{};
  return out;
}

bool Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.row_id << " | q=" << r.q << " n=" << r.n << " d=" << join(r.d);
    if (r.a_param) os << " a=" << *r.a_param;
    os << " | " << r.lhs << " | " << r.rhs << " | " << r.verdict << (r.pass ? "" : " [MISMATCH]") << "\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"row_id", r.row_id}, {"q", r.q},       {"n", r.n},
                     {"d", r.d},           {"lhs", r.lhs},   {"rhs", r.rhs},
                     {"verdict", r.verdict}, {"reason", r.reason}, {"pass", r.pass}};
    j["a_param"] = r.a_param ? nlohmann::json(*r.a_param) : nlohmann::json(nullptr);
    rows_json.push_back(std::move(j));
  }
  return nlohmann::json{{"report", name}, {"rows", rows_json}, {"all_pass", all_pass()}}.dump();
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {1, 7, 11, true, 2, 4},    {2, 7, 10, false, 5, 4},   {3, 7, 9, false, 8, 4},
      {4, 7, 8, false, 37, 8},   {5, 6, 15, true, 2, 4},    {6, 6, 13, false, 3, 4},
      {7, 6, 11, false, 3, 8},   {8, 6, 7, false, 11, 8},   {9, 5, 19, true, 2, 8},
      {10, 5, 14, true, 3, 8},   {11, 5, 12, true, 4, 8},   {12, 5, 11, false, 5, 8},
      {13, 5, 9, false, 9, 8},   {14, 5, 8, false, 17, 8},  {15, 5, 7, false, 53, 8},
      {16, 5, 6, false, 839, 8}, {17, 4, 31, true, 2, 8},   {18, 4, 23, true, 3, 8},
      {19, 4, 19, true, 4, 8},   {20, 4, 17, false, 5, 8},  {21, 4, 15, false, 7, 8},
      {22, 4, 13, false, 13, 8}, {23, 4, 11, false, 29, 8}, {24, 4, 9, false, 274, 8},
      {25, 4, 7, false, 2.039e7, 8},
      {26, 3, 114, true, 2, 8},  {27, 3, 78, true, 3, 8},   {28, 3, 65, true, 4, 8},
      {29, 3, 58, true, 5, 8},   {30, 3, 52, true, 7, 8},   {31, 3, 49, true, 8, 8},
      {32, 3, 47, false, 9, 8},  {33, 3, 46, false, 11, 8}, {34, 3, 43, true, 13, 8},
      {35, 3, 40, true, 17, 8},  {36, 3, 38, false, 23, 8},
  };
  return rows;
}

std::pair<u64, unsigned> table1_row_minimum(const Table1Row& row) {
  const u64 q = nt::next_prime_power(static_cast<u64>(std::ceil(row.q_min)));
  unsigned d2 = row.d2;
  if (row.d2_at_least) {
    while (std::gcd(d2, row.d1) != 1) ++d2;
  }
  return {q, d2};
}

Report verify_table1() {
  Report report{"table1", {}};
  for (const auto& row : table1_rows()) {
    const auto [q, d2] = table1_row_minimum(row);
    const auto tuple = tl::make_divisor_tuple(row.d1 * d2, {row.d1, d2});
    const auto s = sufficient_inequality_sides(q, tuple, BoundParams{row.a, std::nullopt, WMode::c_constant_bound});
    ReportRow r;
    r.row_id = "table1-row" + std::to_string(row.id);
    r.q = q;
    r.n = tuple.n();
    r.d = tuple.entries();
    r.a_param = row.a;
    r.lhs = fmt_double(s.lhs);
    r.rhs = fmt_double(s.rhs) + " (c=" + fmt_double(s.c_value) + ")";
    r.verdict = s.holds ? "holds" : "fails";
    r.reason = "sufficient inequality";
    r.pass = s.holds;
    report.rows.push_back(std::move(r));
  }
  return report;
}

namespace {

ReportRow main_row(const std::string& id, u64 q, const tl::DivisorTuple& tuple, bool expect_hold,
                   const MainOptions& opts) {
  ReportRow r;
  r.row_id = id;
  r.q = q;
  r.n = tuple.n();
  r.d = tuple.entries();
  r.reason = "main inequality";
  try {
    const auto v = check_main_inequality(q, tuple, opts);
    const bool holds = v.status == Status::Exists;
    const bool exact = v.evidence.w_mode == WMode::exact_w;
    r.lhs = v.evidence.lhs;
    r.rhs = v.evidence.rhs;
    r.verdict = holds ? "holds" : (exact ? "fails" : "undecided");
    if (!exact) r.reason += " (W upper bound)";
    r.pass = holds == expect_hold && (holds || exact);
  } catch (const Error& e) {
    r.verdict = std::string("error: ") + e.what();
    r.pass = false;
  }
  if (!expect_hold) r.verdict += " (expected to fail)";
  return r;
}

std::vector<u64> prime_powers_in(u64 lo, u64 hi_exclusive) {
  std::vector<u64> out;
  for (u64 q = lo; q < hi_exclusive; ++q) {
    if (nt::prime_power_decompose(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

Report verify_small_cases(const SmallCaseOptions& opts) {
  Report report{"small_cases", {}};
  const MainOptions exact{opts.factor, false};

  const auto t30 = tl::make_divisor_tuple(30, {2, 3, 5});
  for (u64 q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    report.rows.push_back(main_row("n30-q" + std::to_string(q), q, t30, true, exact));
  }
  const auto t42 = tl::make_divisor_tuple(42, {2, 3, 7});
  for (u64 q : {2, 3, 4}) {
    report.rows.push_back(main_row("n42-q" + std::to_string(q), q, t42, true, exact));
  }
  const auto t56 = tl::make_divisor_tuple(30, {5, 6});
  for (u64 q : {2, 3, 4}) {
    report.rows.push_back(main_row("d56-q" + std::to_string(q), q, t56, false, exact));
  }
  report.rows.push_back(main_row("d49-q2", 2, tl::make_divisor_tuple(36, {4, 9}), false, exact));
  const auto t34 = tl::make_divisor_tuple(12, {3, 4});
  for (u64 q : prime_powers_in(2, 102)) {
    report.rows.push_back(main_row("d34-q" + std::to_string(q), q, t34, false, exact));
  }

  if (opts.residual_sweep) {
    // Triples in the table's region (d1 >= 5; d1 = 4, d2 >= 9; d1 = 3,
    // d2 >= 38) below every row's q bound.
    const MainOptions partial{nt::FactorOptions{opts.residual_budget}, true};
    const std::vector<std::pair<unsigned, unsigned>> spans = {{7, 10}, {6, 14}, {5, 18}, {4, 29}, {3, 113}};
    for (const auto& [d1, d2_max] : spans) {
      const unsigned d2_min = d1 == 4 ? 9 : d1 == 3 ? 38 : d1 + 1;
      for (unsigned d2 = d2_min; d2 <= d2_max; ++d2) {
        if (std::gcd(d1, d2) != 1) continue;
        double q_bound = 0;
        for (const auto& row : table1_rows()) {
          const bool match = row.d1 == d1 && (row.d2_at_least ? d2 >= row.d2 : d2 == row.d2);
          if (match && (q_bound == 0 || row.q_min < q_bound)) q_bound = row.q_min;
        }
        if (q_bound == 0) continue;
        const auto tuple = tl::make_divisor_tuple(d1 * d2, {d1, d2});
        for (u64 q : prime_powers_in(2, static_cast<u64>(std::ceil(q_bound)))) {
          const bool expect_fail = (d1 == 5 && d2 == 6 && q < 5) || (d1 == 4 && d2 == 9 && q == 2);
          std::ostringstream id;
          id << "residual-d" << d1 << "_" << d2 << "-q" << q;
          report.rows.push_back(main_row(id.str(), q, tuple, !expect_fail, expect_fail ? exact : partial));
        }
      }
    }
  }

  // Tail cases: the q0 above which the log-log bound settles existence.
  std::vector<std::pair<unsigned, unsigned>> tails = {{4, 5}};
  for (unsigned d2 = 5; d2 <= 37; ++d2) {
    if (d2 % 3 != 0) tails.emplace_back(3, d2);
  }
  for (const auto& [d1, d2] : tails) {
    const auto tuple = tl::make_divisor_tuple(d1 * d2, {d1, d2});
    const auto t = tail_threshold(tuple);
    ReportRow r;
    r.row_id = "tail-d" + std::to_string(d1) + "_" + std::to_string(d2);
    r.n = tuple.n();
    r.d = tuple.entries();
    r.lhs = "ln ln q";
    r.rhs = t ? fmt_double(t->loglog_q0) : "n/a";
    r.verdict = t ? "q0 computed (" + t->route + ")" : "no threshold";
    r.reason = "computed q0 (reported, no reference value)";
    r.pass = t.has_value();
    report.rows.push_back(std::move(r));
  }
  return report;
}

}  // namespace primtrace::ex
