#include <numeric>
#include <cmath>
#include <set>

#include "doctest.h"
#include "primtrace/error.hpp"
#include "primtrace/numtheory.hpp"

using namespace primtrace;
using u64 = std::uint64_t;

namespace {

// Oracle: plain trial division.
std::vector<std::pair<u64, unsigned>> trial_factor(u64 t) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= t; ++p) {
    unsigned e = 0;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (t > 1) out.emplace_back(t, 1);
  return out;
}

std::vector<std::pair<u64, unsigned>> as_pairs(const nt::Factorization& f) {
  std::vector<std::pair<u64, unsigned>> out;
  for (const auto& pp : f.factors) out.emplace_back(static_cast<u64>(pp.prime), pp.exponent);
  return out;
}

bool naive_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("factorize: worked values") {
  CHECK(nt::factorize(1).factors.empty());
  CHECK(as_pairs(nt::factorize(63)) == std::vector<std::pair<u64, unsigned>>{{3, 2}, {7, 1}});

  const BigInt v = nt::pow(2, 36) - 1;
  const auto f = nt::factorize(v);
  std::set<u64> primes;
  for (const auto& pp : f.factors) primes.insert(static_cast<u64>(pp.prime));
  CHECK(primes == std::set<u64>{3, 5, 7, 13, 19, 37, 73, 109});
  CHECK(f.product() == v);
  CHECK(f.complete);
}

TEST_CASE("factorize agrees with trial division on a deterministic sample") {
  u64 state = 12345;
  for (int i = 0; i < 300; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const u64 t = (state >> 24) % 4'000'000'000'000ULL + 1;
    CHECK(as_pairs(nt::factorize(t)) == trial_factor(t));
  }
}

TEST_CASE("factorize splits products of large primes") {
  // Two primes above the trial-division bound.
  const BigInt a("1000000007"), b("998244353");
  const auto f = nt::factorize(a * b * 4);
  CHECK(f.complete);
  CHECK(f.factors.size() == 3);
  CHECK(f.product() == a * b * 4);

  // 2^67 - 1 = 193707721 * 761838257287.
  const auto g = nt::factorize(nt::pow(2, 67) - 1);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].prime == BigInt("193707721"));
  CHECK(g.factors[1].prime == BigInt("761838257287"));
}

TEST_CASE("factorization budget") {
  const BigInt hard = BigInt("1000000000039") * BigInt("1000000000061");
  CHECK_THROWS_AS(nt::factorize(hard, nt::FactorOptions{8}), Error);
  try {
    nt::factorize(hard, nt::FactorOptions{8});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resource_limit);
  }
  const auto partial = nt::factorize_partial(hard, nt::FactorOptions{8});
  CHECK_FALSE(partial.complete);
  CHECK_THROWS_AS(nt::squarefree_divisor_count(partial), Error);
  // The bound admits at most floor(log C / log 1e6) = 4 primes.
  CHECK(nt::squarefree_divisor_upper_bound(partial) >= 4);
}

TEST_CASE("primality matches a naive oracle") {
  for (u64 n = 0; n < 20000; ++n) CHECK(nt::is_prime_u64(n) == naive_prime(n));
  CHECK_FALSE(nt::is_prime_u64(561));
  CHECK_FALSE(nt::is_prime_u64(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
  CHECK(nt::is_probable_prime(nt::pow(2, 127) - 1));
  CHECK_FALSE(nt::is_probable_prime(nt::pow(2, 128) + 1));
}

TEST_CASE("squarefree divisor count") {
  CHECK(nt::squarefree_divisor_count(nt::factorize(1)) == 1);
  CHECK(nt::squarefree_divisor_count(nt::factorize(63)) == 4);
  CHECK(nt::squarefree_divisor_count(nt::factorize(nt::pow(2, 30) - 1)) == 64);
}

TEST_CASE("power-minus-one factorization matches the full value") {
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 30}, {3, 30}, {4, 42}, {13, 30}, {9, 20}, {2, 64}}) {
    const auto f = nt::factorize_power_minus_one(q, n);
    CHECK(f.complete);
    CHECK(f.value == nt::pow(q, n) - 1);
    CHECK(f.product() == f.value);
    for (std::size_t i = 1; i < f.factors.size(); ++i) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
  }
}

TEST_CASE("arithmetic functions against brute force") {
  for (u64 t = 1; t <= 2000; ++t) {
    std::vector<u64> divs;
    for (u64 d = 1; d <= t; ++d) {
      if (t % d == 0) divs.push_back(d);
    }
    CHECK(nt::divisors(t) == divs);
    CHECK(nt::sigma0(t) == divs.size());
    u64 phi = 0;
    for (u64 k = 1; k <= t; ++k) phi += std::gcd(k, t) == 1;
    CHECK(nt::euler_phi(t) == phi);
    int mu = 1;
    for (auto [p, e] : trial_factor(t)) mu = e > 1 ? 0 : -mu;
    CHECK(nt::mobius(t) == mu);
  }
}

TEST_CASE("prime powers") {
  CHECK_FALSE(nt::prime_power_decompose(1));
  CHECK_FALSE(nt::prime_power_decompose(6));
  CHECK(nt::prime_power_decompose(8) == std::pair<u64, unsigned>{2, 3});
  CHECK(nt::prime_power_decompose(49) == std::pair<u64, unsigned>{7, 2});
  CHECK(nt::next_prime_power(274) == 277);
  CHECK(nt::next_prime_power(6) == 7);
  CHECK(nt::next_prime_power(8) == 8);
}

TEST_CASE("c constants") {
  CHECK(nt::c_constant(2, 30, 4) == doctest::Approx(2.052).epsilon(1e-3));
  for (u64 q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    for (u64 n = 2; n <= 40; ++n) {
      const bool even = q % 2 == 1;  // q^n - 1 is even exactly when q is odd
      CHECK(nt::c_constant(q, n, 4) < *nt::c_ceiling(4, even));
      CHECK(nt::c_constant(q, n, 8) < *nt::c_ceiling(8, even));
    }
  }
  CHECK_FALSE(nt::c_ceiling(5, true));
}

TEST_CASE("log-log bound and slack policy") {
  CHECK_THROWS_AS(nt::w_bound_loglog(2.0), Error);
  CHECK(nt::w_bound_loglog(std::exp(std::exp(1.0))) == doctest::Approx(std::exp(std::exp(1.0) * 0.96)));
  CHECK(nt::holds_with_slack(2.0, 1.0));
  CHECK_FALSE(nt::holds_with_slack(1.0, 1.0));
  CHECK(nt::holds_with_slack(1.0 + 1e-6, 1.0));
}
