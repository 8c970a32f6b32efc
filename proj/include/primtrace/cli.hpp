#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "primtrace/numtheory.hpp"

namespace primtrace::cli {

// Exit codes shared by every command.
inline constexpr int kExitDecisive = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

struct CommandReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<nlohmann::json> verdicts;  // one object per verdict, count, or report row
  std::vector<std::string> witnesses;    // element encodings, already re-validated
  std::vector<std::string> lines;        // human-readable rendering
  double timing = 0;                     // seconds
  int status = kExitDecisive;

  std::string to_text() const;
  // Deterministic: the timing field is only written when asked for.
  std::string to_json(bool with_timing = false) const;
};

struct ProblemArgs {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::vector<unsigned> d;
  std::vector<std::uint64_t> a;  // target encodings
  bool allow_k1 = false;
  std::uint64_t budget = nt::FactorOptions{}.rho_budget;
};

enum class Strategy { exhaustive, lift };
enum class Scope { all, table1, small_cases, cohen, exceptions, charsum };

Strategy parse_strategy(const std::string& s);
Scope parse_scope(const std::string& s);
const char* scope_name(Scope s);

// "2,3,5" -> {2,3,5}; names the flag and the offending token on error.
std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& flag);

CommandReport cmd_check(const ProblemArgs& args);
CommandReport cmd_count(const ProblemArgs& args);
CommandReport cmd_find(const ProblemArgs& args, Strategy strategy);

struct VerifyOptions {
  std::uint64_t budget = nt::FactorOptions{}.rho_budget;
  // Also run the residual sweep below every sufficient-inequality table row (slow).
  bool residual_sweep = false;
};
CommandReport cmd_verify_paper(Scope scope, const VerifyOptions& opts = {});

// Full command-line driver; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace primtrace::cli
