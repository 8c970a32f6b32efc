#pragma once

#include <stdexcept>
#include <string>

namespace primtrace {

enum class Errc {
  invalid_argument,
  domain_error,
  resource_limit,
  not_prime,
  not_prime_power,
  not_divisor,
  divisibility,
  k_out_of_range,
  not_increasing,
  not_in_subfield,
  not_coprime,
  not_applicable,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Broken internal invariant (e.g. the two lambda formulas disagree).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace primtrace
