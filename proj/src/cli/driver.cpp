#include <iostream>

#include "CLI11.hpp"
#include "primtrace/cli.hpp"
#include "primtrace/error.hpp"

namespace primtrace::cli {

namespace {

std::vector<unsigned> to_unsigned(const std::vector<std::uint64_t>& v, const std::string& flag) {
  std::vector<unsigned> out;
  for (auto x : v) {
    if (x > 1'000'000) throw Error(Errc::invalid_argument, flag + " token " + std::to_string(x) + " is too large");
    out.push_back(static_cast<unsigned>(x));
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive elements with prescribed traces over intermediate extensions"};
  app.require_subcommand(1);

  std::uint64_t q = 0;
  unsigned n = 0;
  std::string d_text, a_text, strategy = "exhaustive", scope = "all";
  bool allow_k1 = false, as_json = false, residual = false;
  std::uint64_t budget = nt::FactorOptions{}.rho_budget;

  auto problem_flags = [&](CLI::App* sub, bool with_targets) {
    sub->add_option("--q", q, "prime power q")->required();
    sub->add_option("--n", n, "extension degree n")->required();
    sub->add_option("--d", d_text, "comma-separated divisors d_1 < ... < d_k")->required();
    if (with_targets) sub->add_option("--a", a_text, "comma-separated target encodings")->required();
    sub->add_flag("--allow-k1", allow_k1, "admit a single trace (k = 1)");
    sub->add_option("--budget", budget, "Pollard rho iteration budget");
    sub->add_flag("--json", as_json, "structured output");
  };

  auto* check = app.add_subcommand("check", "run the existence checkers");
  problem_flags(check, false);
  auto* count = app.add_subcommand("count", "exhaustive fiber and primitive counts");
  problem_flags(count, true);
  auto* find = app.add_subcommand("find", "search for a primitive element with the given traces");
  problem_flags(find, true);
  find->add_option("--strategy", strategy, "exhaustive or lift");
  auto* verify = app.add_subcommand("verify-paper", "reproduce the verified claims");
  verify->add_option("--scope", scope, "all, table1, small_cases, cohen, exceptions or charsum");
  verify->add_option("--budget", budget, "Pollard rho iteration budget");
  verify->add_flag("--residual", residual, "also sweep the triples below every sufficient-inequality table row");
  verify->add_flag("--json", as_json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitDecisive : kExitError;
  }

  try {
    CommandReport report;
    if (verify->parsed()) {
      report = cmd_verify_paper(parse_scope(scope), VerifyOptions{budget, residual});
    } else {
      ProblemArgs args;
      args.q = q;
      args.n = n;
      args.d = to_unsigned(parse_list(d_text, "--d"), "--d");
      if (!a_text.empty()) args.a = parse_list(a_text, "--a");
      args.allow_k1 = allow_k1;
      args.budget = budget;
      if (check->parsed()) {
        report = cmd_check(args);
      } else if (count->parsed()) {
        report = cmd_count(args);
      } else {
        report = cmd_find(args, parse_strategy(strategy));
      }
    }
    if (as_json) {
      out << report.to_json() << "\n";
    } else {
      out << report.to_text();
    }
    return report.status;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace primtrace::cli
