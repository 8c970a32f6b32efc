#include "primtrace/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "primtrace/error.hpp"

namespace primtrace::nt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = u64{i} * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

bool miller_rabin_u64(u64 n, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

BigInt powmod_big(BigInt base, BigInt exp, const BigInt& mod) {
  return boost::multiprecision::powm(base, exp, mod);
}

bool miller_rabin_big(const BigInt& n, const BigInt& a) {
  BigInt d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  BigInt x = powmod_big(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

u64 splitmix64(u64& state) {
  u64 z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

u64 low_word(const BigInt& n) { return static_cast<u64>(n & BigInt(~u64{0})); }

// Brent's variant with batched gcds. Returns a nontrivial factor or nullopt
// once `budget` iterations are spent.
std::optional<u64> rho_u64(u64 n, u64& budget) {
  if (n % 2 == 0) return 2;
  u64 seed = n;
  while (budget > 0) {
    const u64 c = splitmix64(seed) % (n - 1) + 1;
    u64 y = splitmix64(seed) % n;
    u64 x = y, ys = y, q = 1, g = 1;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = static_cast<u64>((u128{mulmod64(y, y, n)} + c) % n);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 steps = std::min(batch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = static_cast<u64>((u128{mulmod64(y, y, n)} + c) % n);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        budget = budget > steps ? budget - steps : 0;
        if (budget == 0 && g == 1) return std::nullopt;
      }
    }
    if (g == n) {
      do {
        ys = static_cast<u64>((u128{mulmod64(ys, ys, n)} + c) % n);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

std::optional<BigInt> rho_big(const BigInt& n, u64& budget) {
  if ((n & 1) == 0) return BigInt(2);
  u64 seed = low_word(n) ^ static_cast<u64>(boost::multiprecision::msb(n));
  while (budget > 0) {
    const BigInt c = BigInt(splitmix64(seed)) % (n - 1) + 1;
    BigInt y = BigInt(splitmix64(seed)) % n;
    BigInt x = y, ys = y, q = 1, g = 1;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 steps = std::min(batch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? BigInt(x - y) : BigInt(y - x)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        budget = budget > steps ? budget - steps : 0;
        if (budget == 0 && g == 1) return std::nullopt;
      }
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = boost::multiprecision::gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

std::optional<BigInt> find_factor(const BigInt& n, u64 budget) {
  if (n <= BigInt(~u64{0})) {
    if (auto f = rho_u64(static_cast<u64>(n), budget)) return BigInt(*f);
    return std::nullopt;
  }
  return rho_big(n, budget);
}

void finish(Factorization& out, std::map<BigInt, unsigned>& primes) {
  out.factors.clear();
  for (auto& [p, e] : primes) out.factors.push_back({p, e});
  std::sort(out.cofactors.begin(), out.cofactors.end());
  out.complete = out.cofactors.empty();
}

// Splits `rest` (no prime factors below the trial-division bound) into
// `primes` / `cofactors`.
void split_large(BigInt rest, const FactorOptions& opts, std::map<BigInt, unsigned>& primes,
                 std::vector<BigInt>& cofactors) {
  const BigInt bound_sq = BigInt(kTrialDivisionBound) * kTrialDivisionBound;
  std::vector<BigInt> stack{std::move(rest)};
  while (!stack.empty()) {
    BigInt n = std::move(stack.back());
    stack.pop_back();
    if (n == 1) continue;
    if (n < bound_sq || is_probable_prime(n)) {
      ++primes[n];
      continue;
    }
    auto f = find_factor(n, opts.rho_budget);
    if (!f) {
      cofactors.push_back(n);
      continue;
    }
    stack.push_back(*f);
    stack.push_back(n / *f);
  }
}

void factor_into(const BigInt& t, const FactorOptions& opts, std::map<BigInt, unsigned>& primes,
                 std::vector<BigInt>& cofactors) {
  BigInt rest = t;
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    primes[BigInt(p)] += e;
  }
  if (rest == 1) return;
  split_large(std::move(rest), opts, primes, cofactors);
}

}  // namespace

BigInt Factorization::product() const {
  BigInt out = 1;
  for (const auto& pe : factors) out *= nt::pow(pe.prime, pe.exponent);
  for (const auto& c : cofactors) out *= c;
  return out;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= BigInt(~u64{0})) return is_prime_u64(static_cast<u64>(n));
  for (std::uint32_t p : small_primes()) {
    if (p > 1000) break;
    if (n % p == 0) return false;
  }
  // The first 13 prime bases are a deterministic witness set below 3.3170e24.
  static const BigInt deterministic_limit("3317044064679887385961981");
  static constexpr u64 bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (u64 a : bases) {
    if (!miller_rabin_big(n, BigInt(a))) return false;
  }
  if (n < deterministic_limit) return true;
  std::mt19937_64 gen(low_word(n));
  for (int round = 0; round < 64; ++round) {
    const BigInt a = BigInt(gen()) % (n - 3) + 2;
    if (!miller_rabin_big(n, a)) return false;
  }
  return true;
}

Factorization factorize_partial(const BigInt& t, const FactorOptions& opts) {
  if (t < 1) throw Error(Errc::invalid_argument, "factorize: input must be >= 1");
  Factorization out;
  out.value = t;
  std::map<BigInt, unsigned> primes;
  factor_into(t, opts, primes, out.cofactors);
  finish(out, primes);
  return out;
}

Factorization factorize(const BigInt& t, const FactorOptions& opts) {
  auto f = factorize_partial(t, opts);
  if (!f.complete) {
    throw Error(Errc::resource_limit,
                "factorize: composite cofactor " + f.cofactors.front().str() +
                    " survived the rho budget");
  }
  return f;
}

Factorization factorize_power_minus_one_partial(u64 q, u64 n, const FactorOptions& opts) {
  const auto pp = prime_power_decompose(q);
  if (!pp) throw Error(Errc::not_prime_power, "factorize_power_minus_one: q is not a prime power");
  if (n == 0) throw Error(Errc::invalid_argument, "factorize_power_minus_one: n must be >= 1");
  const auto [p, s] = *pp;
  const u64 m = n * s;

  Factorization out;
  out.value = nt::pow(BigInt(p), m) - 1;
  std::map<BigInt, unsigned> primes;
  for (u64 e : divisors(m)) {
    // Phi_e(p) = prod_{f | e} (p^f - 1)^{mu(e/f)}
    BigInt num = 1, den = 1;
    for (u64 f : divisors(e)) {
      const int mu = mobius(e / f);
      if (mu == 1) num *= nt::pow(BigInt(p), f) - 1;
      if (mu == -1) den *= nt::pow(BigInt(p), f) - 1;
    }
    factor_into(num / den, opts, primes, out.cofactors);
  }
  finish(out, primes);
  return out;
}

Factorization factorize_power_minus_one(u64 q, u64 n, const FactorOptions& opts) {
  auto f = factorize_power_minus_one_partial(q, n, opts);
  if (!f.complete) {
    throw Error(Errc::resource_limit, "factorize: q^n - 1 has a cofactor " +
                                          f.cofactors.front().str() +
                                          " that survived the rho budget");
  }
  return f;
}

BigInt squarefree_divisor_count(const Factorization& f) {
  if (!f.complete) {
    throw Error(Errc::invalid_argument, "squarefree_divisor_count: incomplete factorization");
  }
  return BigInt(1) << f.factors.size();
}

BigInt squarefree_divisor_upper_bound(const Factorization& f) {
  std::size_t omega = f.factors.size();
  const double log_bound = std::log(static_cast<double>(kTrialDivisionBound));
  for (const auto& c : f.cofactors) {
    const double log_c = (boost::multiprecision::msb(c) + 1) * std::log(2.0);
    omega += static_cast<std::size_t>(std::floor(log_c / log_bound));
  }
  return BigInt(1) << omega;
}

std::vector<std::pair<u64, unsigned>> factor_small(u64 t) {
  if (t == 0) throw Error(Errc::invalid_argument, "factor_small: input must be >= 1");
  std::vector<std::pair<u64, unsigned>> out;
  for (std::uint32_t p : small_primes()) {
    if (u64{p} * p > t) break;
    if (t % p != 0) continue;
    unsigned e = 0;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (t == 1) return out;
  if (t < u64{kTrialDivisionBound} * kTrialDivisionBound) {
    out.emplace_back(t, 1);
    return out;
  }
  for (const auto& pe : factorize(BigInt(t)).factors) {
    out.emplace_back(static_cast<u64>(pe.prime), pe.exponent);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(u64 t) {
  if (t == 0) throw Error(Errc::invalid_argument, "mobius: input must be >= 1");
  int sign = 1;
  for (const auto& [p, e] : factor_small(t)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

u64 euler_phi(u64 t) {
  if (t == 0) throw Error(Errc::invalid_argument, "euler_phi: input must be >= 1");
  u64 phi = t;
  for (const auto& [p, e] : factor_small(t)) phi = phi / p * (p - 1);
  return phi;
}

u64 sigma0(u64 t) {
  if (t == 0) throw Error(Errc::invalid_argument, "sigma0: input must be >= 1");
  u64 count = 1;
  for (const auto& [p, e] : factor_small(t)) count *= e + 1;
  return count;
}

std::vector<u64> divisors(u64 t) {
  if (t == 0) throw Error(Errc::invalid_argument, "divisors: input must be >= 1");
  std::vector<u64> out{1};
  for (const auto& [p, e] : factor_small(t)) {
    const std::size_t size = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod64(result, base, mod);
    base = mulmod64(base, base, mod);
    exp >>= 1;
  }
  return result;
}

BigInt pow(const BigInt& base, u64 exp) {
  BigInt result = 1, b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q) {
  if (q < 2) return std::nullopt;
  const auto f = factor_small(q);
  if (f.size() != 1) return std::nullopt;
  return std::pair<u64, unsigned>{f[0].first, f[0].second};
}

u64 next_prime_power(u64 from) {
  u64 q = std::max<u64>(from, 2);
  while (!prime_power_decompose(q)) ++q;
  return q;
}

std::vector<u64> primes_dividing_power_minus_one_below(u64 q, u64 n, u64 bound) {
  if (bound < 2) throw Error(Errc::invalid_argument, "primes_dividing: bound must be >= 2");
  std::vector<u64> out;
  auto consider = [&](u64 p) {
    if (q % p != 0 && powmod(q % p, n, p) == 1) out.push_back(p);
  };
  if (bound <= kTrialDivisionBound) {
    for (std::uint32_t p : small_primes()) {
      if (p > bound) break;
      consider(p);
    }
  } else {
    for (u64 p = 2; p <= bound; ++p) {
      if (is_prime_u64(p)) consider(p);
    }
  }
  return out;
}

std::optional<double> c_ceiling(unsigned a, bool t_even) {
  if (a == 4) return t_even ? 4.9 : 2.9;
  if (a == 8) return 4514.7;
  return std::nullopt;
}

double c_constant(u64 q, u64 n, unsigned a) {
  if (a == 0 || a >= 63) throw Error(Errc::invalid_argument, "c_constant: unsupported a");
  const auto primes = primes_dividing_power_minus_one_below(q, n, u64{1} << a);
  double log_c = 0.0;
  for (u64 p : primes) log_c += std::log(2.0) - std::log(static_cast<double>(p)) / a;
  const double c = std::exp(log_c);
  const bool t_even = q % 2 == 1;
  if (auto ceiling = c_ceiling(a, t_even); ceiling && !(c < *ceiling)) {
    throw InvariantError("c_constant: value exceeds the ceiling for its class");
  }
  return c;
}

double w_bound_loglog(double t) {
  if (!(t >= 3.0)) throw Error(Errc::domain_error, "w_bound_loglog: requires t >= 3");
  const double lnln = std::log(std::log(t));
  if (!(lnln > 0.0)) throw Error(Errc::domain_error, "w_bound_loglog: ln ln t must be positive");
  return std::exp(0.96 * std::log(t) / lnln);
}

bool holds_with_slack(double lhs, double rhs, double slack) {
  return lhs >= rhs + slack * std::max(1.0, std::abs(rhs));
}

}  // namespace primtrace::nt
