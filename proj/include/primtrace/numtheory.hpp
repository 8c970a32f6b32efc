#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace primtrace {

using BigInt = boost::multiprecision::cpp_int;

namespace nt {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// Prime factorization of `value`. When `complete` is false, `cofactors`
// holds the composite parts that rho could not split within its budget.
struct Factorization {
  BigInt value;
  std::vector<PrimePower> factors;
  std::vector<BigInt> cofactors;
  bool complete = true;

  std::size_t distinct_primes() const { return factors.size(); }
  BigInt product() const;
};

struct FactorOptions {
  // Iteration cap for a single Pollard-rho invocation.
  std::uint64_t rho_budget = std::uint64_t{1} << 26;
};

inline constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

bool is_probable_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

// Complete factorization; throws Error{resource_limit} if a composite
// cofactor survives the rho budget.
Factorization factorize(const BigInt& t, const FactorOptions& opts = {});

// Same search, but returns whatever was found with complete == false
// instead of throwing.
Factorization factorize_partial(const BigInt& t, const FactorOptions& opts = {});

// Factors q^n - 1 through its cyclotomic pieces Phi_e(p) for e | s*n, where
// q = p^s. Much cheaper than factoring the full value.
Factorization factorize_power_minus_one(std::uint64_t q, std::uint64_t n,
                                        const FactorOptions& opts = {});
Factorization factorize_power_minus_one_partial(std::uint64_t q, std::uint64_t n,
                                                const FactorOptions& opts = {});

// W(t) = 2^omega(t). Rejects incomplete factorizations.
BigInt squarefree_divisor_count(const Factorization& f);

// Upper bound on W valid for partial factorizations: each unfactored
// composite cofactor C has all prime factors above the trial-division
// bound, so it contributes at most floor(log C / log bound) primes.
BigInt squarefree_divisor_upper_bound(const Factorization& f);

int mobius(std::uint64_t t);
std::uint64_t euler_phi(std::uint64_t t);
std::uint64_t sigma0(std::uint64_t t);
std::vector<std::uint64_t> divisors(std::uint64_t t);
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t t);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
BigInt pow(const BigInt& base, std::uint64_t exp);

// {p, s} with q = p^s, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decompose(std::uint64_t q);
std::uint64_t next_prime_power(std::uint64_t from);

// Primes p <= bound with q^n = 1 (mod p). Never factors q^n - 1.
std::vector<std::uint64_t> primes_dividing_power_minus_one_below(std::uint64_t q,
                                                                 std::uint64_t n,
                                                                 std::uint64_t bound);

// c_{t,a} = 2^j / (p_1...p_j)^(1/a) for t = q^n - 1 and the primes p_i <= 2^a.
double c_constant(std::uint64_t q, std::uint64_t n, unsigned a);

// Ceiling on c_{t,a}: 4.9 (t even) / 2.9 (t odd) for a = 4; 4514.7 for a = 8.
std::optional<double> c_ceiling(unsigned a, bool t_even);

// t^(0.96 / ln ln t), natural logarithms.
double w_bound_loglog(double t);

inline constexpr double kDefaultSlack = 1e-9;

// Conservative real comparison: lhs >= rhs only if it survives a relative
// slack on rhs.
bool holds_with_slack(double lhs, double rhs, double slack = kDefaultSlack);

}  // namespace nt
}  // namespace primtrace
