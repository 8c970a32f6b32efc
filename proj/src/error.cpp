#include "primtrace/error.hpp"

namespace primtrace {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::domain_error: return "domain_error";
    case Errc::resource_limit: return "resource_limit";
    case Errc::not_prime: return "not_prime";
    case Errc::not_prime_power: return "not_prime_power";
    case Errc::not_divisor: return "not_divisor";
    case Errc::divisibility: return "divisibility";
    case Errc::k_out_of_range: return "k_out_of_range";
    case Errc::not_increasing: return "not_increasing";
    case Errc::not_in_subfield: return "not_in_subfield";
    case Errc::not_coprime: return "not_coprime";
    case Errc::not_applicable: return "not_applicable";
  }
  return "unknown";
}

}  // namespace primtrace
