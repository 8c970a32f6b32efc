#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primtrace/numtheory.hpp"
#include "primtrace/tracelab.hpp"

namespace primtrace::ex {

enum class Status { Exists, Inconclusive, KnownException };

enum class Reason {
  MainInequality,
  LcmCriterion,
  CopCaseA,
  CopCaseB1,
  CopCaseB2,
  CopCaseB3,
  CohenException,
  D1EqualsTwoFamily,
  NoneApplicable,
};

// Which estimate of W(q^n - 1) an inequality used.
enum class WMode {
  exact_w,            // from a complete factorization
  partial_factor,     // upper bound from a partial factorization
  loglog_bound,       // W(t - 1) < t^(0.96 / ln ln t)
  c_constant_bound,   // W(t) <= c_{t,a} t^(1/a)
};

const char* status_name(Status s);
const char* reason_name(Reason r);
const char* wmode_name(WMode w);

struct Evidence {
  std::string inequality;  // human-readable form of what was compared
  std::string lhs;
  std::string rhs;
  std::optional<double> lhs_value;
  std::optional<double> rhs_value;
  std::optional<unsigned> a_param;
  std::optional<double> c_value;
  std::optional<WMode> w_mode;
  std::string witness;
  std::string note;
};

struct ExistenceVerdict {
  Status status = Status::Inconclusive;
  Reason reason = Reason::NoneApplicable;
  Evidence evidence;

  bool decisive() const { return status != Status::Inconclusive; }
};

struct BoundParams {
  unsigned a = 8;
  // c_{q^n,a}; computed from q and n when empty.
  std::optional<double> c_value;
  WMode w_mode = WMode::c_constant_bound;
};

struct MainOptions {
  nt::FactorOptions factor;
  // Fall back to the partial-factorization upper bound on W instead of
  // propagating the resource-limit error.
  bool allow_partial = false;
};

// q^(n/2 - lambda) >= W(q^n - 1), decided exactly as
// q^(n - 2 lambda) >= W^2 over the integers.
ExistenceVerdict check_main_inequality(std::uint64_t q, const tl::DivisorTuple& tuple, const MainOptions& opts = {});

ExistenceVerdict check_lcm_criterion(const tl::DivisorTuple& tuple);

struct SufficientSides {
  double lhs = 0;
  double rhs = 0;
  double c_value = 1;
  bool holds = false;
};

// n/2 - sum d_i + k - 1 >= n/a + log_q(c_{q^n,a}) for pairwise coprime
// entries; conservative under the default slack.
SufficientSides sufficient_inequality_sides(std::uint64_t q, const tl::DivisorTuple& tuple, const BoundParams& params);
bool check_sufficient_inequality(std::uint64_t q, const tl::DivisorTuple& tuple, const BoundParams& params);

// Threshold T on ln ln q above which the log-log bound on W settles the
// main inequality for a two-entry coprime tuple with d_1 d_2 = n. Returns
// nullopt when n/2 <= lambda. For d_1 = 3, 17 <= d_2 the c_{t,8} ceiling
// route is also tried and the smaller threshold kept.
struct TailThreshold {
  double loglog_q0 = 0;
  std::string route;
};
std::optional<TailThreshold> tail_threshold(const tl::DivisorTuple& tuple);

// Coprime case: the case-A/B conditions, then the sufficient inequality
// and tail-threshold routes they are derived from.
ExistenceVerdict check_cop(std::uint64_t q, const tl::DivisorTuple& tuple);

// Specs that can never be met by a primitive element because one trace
// constraint alone hits a one-trace exception.
std::optional<ExistenceVerdict> known_exception(const gf::FieldContext& ctx, const tl::TraceSpec& spec);

struct ChainResult {
  ExistenceVerdict final;
  std::vector<ExistenceVerdict> trail;  // every checker consulted, in order
};

// known_exception (when a spec is given) > lcm criterion > main inequality >
// coprime theorem; stops at the first decisive verdict.
ChainResult decide(std::uint64_t q, const tl::DivisorTuple& tuple, const MainOptions& opts = {},
                   const gf::FieldContext* ctx = nullptr, const tl::TraceSpec* spec = nullptr);

// One line of a verification report.
struct ReportRow {
  std::string row_id;
  std::uint64_t q = 0;
  unsigned n = 0;
  std::vector<unsigned> d;
  std::optional<unsigned> a_param;
  std::string lhs;
  std::string rhs;
  std::string verdict;  // what was observed
  std::string reason;
  bool pass = false;    // observation matches the expected outcome
};

struct Report {
  std::string name;
  std::vector<ReportRow> rows;

  bool all_pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct Table1Row {
  int id;
  unsigned d1;
  unsigned d2;
  bool d2_at_least;
  double q_min;  // 2 for rows valid for every q
  unsigned a;
};

const std::vector<Table1Row>& table1_rows();

// Smallest (q, d_2) a row claims: the least prime power >= q_min and the
// least d_2 coprime to d_1 meeting the bound.
std::pair<std::uint64_t, unsigned> table1_row_minimum(const Table1Row& row);

Report verify_table1();

struct SmallCaseOptions {
  nt::FactorOptions factor;
  // Also sweep every residual triple left uncovered by the table.
  bool residual_sweep = false;
  std::uint64_t residual_budget = std::uint64_t{1} << 18;
};

Report verify_small_cases(const SmallCaseOptions& opts = {});

}  // namespace primtrace::ex
