#include "primtrace/gfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "primtrace/error.hpp"

namespace primtrace::gf {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Poly = std::vector<u32>;  // low to high, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u32 inv_mod(u32 a, u32 p) { return static_cast<u32>(nt::powmod(a, p - 2, p)); }

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, u32 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j < df; ++j) {
      a[shift + j] = static_cast<u32>((a[shift + j] + c * (p - f[j])) % p);
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u32 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + u64{a[i]} * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, BigInt e, const Poly& f, u32 p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if ((e & 1) != 0) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, u32 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly make_monic(Poly a, u32 p) {
  if (a.empty()) return a;
  const u64 lead_inv = inv_mod(a.back(), p);
  for (auto& c : a) c = static_cast<u32>(c * lead_inv % p);
  return a;
}

Poly poly_gcd(Poly a, Poly b, u32 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(std::move(b), p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

bool has_root(const Poly& f, u32 p) {
  for (u32 x = 0; x < p; ++x) {
    u64 v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

FieldElement to_element(const Poly& a, unsigned m) {
  FieldElement out;
  out.coeffs.assign(m, 0);
  std::copy(a.begin(), a.end(), out.coeffs.begin());
  return out;
}

Poly to_poly(const FieldElement& x) {
  Poly a(x.coeffs.begin(), x.coeffs.end());
  trim(a);
  return a;
}

bool encoding_less(const FieldElement& a, const FieldElement& b) {
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  }
  return false;
}

void require_divisor(const FieldContext& ctx, unsigned d, const char* op) {
  if (d == 0 || ctx.n() % d != 0) {
    throw Error(Errc::not_divisor, std::string(op) + ": d=" + std::to_string(d) +
                                       " does not divide n=" + std::to_string(ctx.n()));
  }
}

LinearMap map_power(const LinearMap& base, u64 e, u32 p, unsigned m) {
  LinearMap result = LinearMap::identity(p, m);
  for (u64 i = 0; i < e; ++i) result = result.then(base);
  return result;
}

}  // namespace

bool FieldElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](u32 c) { return c == 0; });
}

std::size_t ElementHash::operator()(const FieldElement& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (u32 c : x.coeffs) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

LinearMap::LinearMap(u32 p, unsigned m) : p_(p), m_(m), entries_(std::size_t{m} * m, 0) {}

LinearMap LinearMap::identity(u32 p, unsigned m) {
  LinearMap out(p, m);
  for (unsigned i = 0; i < m; ++i) out.set(i, i, 1);
  return out;
}

FieldElement LinearMap::apply(const FieldElement& x) const {
  FieldElement out;
  out.coeffs.assign(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    u64 acc = 0;
    for (unsigned j = 0; j < m_; ++j) acc = (acc + u64{at(i, j)} * x.coeffs[j]) % p_;
    out.coeffs[i] = static_cast<u32>(acc);
  }
  return out;
}

LinearMap LinearMap::then(const LinearMap& next) const {
  LinearMap out(p_, m_);
  for (unsigned i = 0; i < m_; ++i) {
    for (unsigned j = 0; j < m_; ++j) {
      u64 acc = 0;
      for (unsigned k = 0; k < m_; ++k) acc = (acc + u64{next.at(i, k)} * at(k, j)) % p_;
      out.set(i, j, static_cast<u32>(acc));
    }
  }
  return out;
}

LinearMap LinearMap::plus(const LinearMap& other) const {
  LinearMap out(p_, m_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = static_cast<u32>((u64{entries_[i]} + other.entries_[i]) % p_);
  }
  return out;
}

bool is_irreducible(const std::vector<u32>& f, u32 p) {
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  if (p <= 64 && has_root(f, p)) return false;
  // Ben-Or: no factor of degree i <= m/2 divides f.
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, BigInt(p), f, p);
    const Poly g = poly_gcd(f, poly_sub(h, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<u32> smallest_irreducible(u32 p, unsigned m) {
  if (m == 0) throw Error(Errc::invalid_argument, "smallest_irreducible: degree must be >= 1");
  std::vector<u32> lower(m, 0);
  while (true) {
    std::vector<u32> f = lower;
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < m && ++lower[i] == p) lower[i++] = 0;
    if (i == m) throw InvariantError("smallest_irreducible: exhausted candidates");
  }
}

FieldElement FieldContext::zero() const { return FieldElement{std::vector<u32>(m_, 0)}; }

FieldElement FieldContext::one() const { return constant(1); }

FieldElement FieldContext::constant(u32 c) const {
  FieldElement out = zero();
  out.coeffs[0] = c % p_;
  return out;
}

FieldElement FieldContext::x_class() const {
  return to_element(poly_mod(Poly{0, 1}, defining_poly_, p_), m_);
}

u64 FieldContext::encode(const FieldElement& x) const {
  if (size_ > BigInt(~u64{0})) throw Error(Errc::resource_limit, "encode: field too large for 64-bit codes");
  u64 v = 0;
  for (std::size_t i = x.coeffs.size(); i-- > 0;) v = v * p_ + x.coeffs[i];
  return v;
}

FieldElement FieldContext::decode(u64 code) const {
  if (BigInt(code) >= size_) throw Error(Errc::invalid_argument, "decode: code outside the field");
  FieldElement out = zero();
  for (unsigned i = 0; i < m_ && code > 0; ++i) {
    out.coeffs[i] = static_cast<u32>(code % p_);
    code /= p_;
  }
  return out;
}

bool FieldContext::belongs(const FieldElement& x) const {
  return x.coeffs.size() == m_ &&
         std::all_of(x.coeffs.begin(), x.coeffs.end(), [this](u32 c) { return c < p_; });
}

u64 FieldContext::dlog_encoded(u32 code) const {
  if (!tables_) throw Error(Errc::not_applicable, "dlog: context has no log table");
  if (code == 0) throw Error(Errc::domain_error, "dlog: zero has no logarithm");
  return tables_->log[code];
}

u64 FieldContext::dlog(const FieldElement& x) const { return dlog_encoded(static_cast<u32>(encode(x))); }

u32 FieldContext::exp_encoded(u64 k) const {
  if (!tables_) throw Error(Errc::not_applicable, "exp: context has no log table");
  return tables_->exp[k % tables_->exp.size()];
}

LinearMap FieldContext::trace_map(unsigned d) const {
  require_divisor(*this, d, "trace_map");
  const LinearMap step = map_power(*frobenius_q_, d, p_, m_);
  LinearMap power = LinearMap::identity(p_, m_);
  LinearMap sum(p_, m_);
  for (unsigned i = 0; i < n_ / d; ++i) {
    sum = sum.plus(power);
    power = power.then(step);
  }
  return sum;
}

std::string FieldContext::defining_poly_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < defining_poly_.size(); ++i) os << (i ? "," : "") << defining_poly_[i];
  return os.str();
}

std::string FieldContext::descriptor() const {
  std::ostringstream os;
  os << p_ << ',' << s_ << ',' << n_ << ';' << defining_poly_string();
  return os.str();
}

FieldContext build_context(u32 p, unsigned s, unsigned n, const ContextOptions& opts) {
  if (!nt::is_prime_u64(p)) throw Error(Errc::not_prime, "build_context: " + std::to_string(p) + " is not prime");
  if (s == 0 || n == 0) throw Error(Errc::invalid_argument, "build_context: s and n must be positive");
  FieldContext ctx;
  ctx.p_ = p;
  ctx.s_ = s;
  ctx.n_ = n;
  ctx.m_ = s * n;
  ctx.q_ = static_cast<u64>(nt::pow(BigInt(p), s));
  ctx.size_ = nt::pow(BigInt(p), ctx.m_);
  ctx.order_ = ctx.size_ - 1;
  ctx.options_ = opts;
  ctx.defining_poly_ = smallest_irreducible(p, ctx.m_);
  ctx.order_factorization_ = nt::factorize_power_minus_one(p, ctx.m_, opts.factor);

  const Poly& f = ctx.defining_poly_;
  const unsigned m = ctx.m_;
  // Column j of x -> x^p is (x^p)^j.
  const Poly xp = poly_powmod(Poly{0, 1}, BigInt(p), f, p);
  LinearMap frob_p(p, m);
  Poly column{1};
  for (unsigned j = 0; j < m; ++j) {
    const FieldElement col = to_element(column, m);
    for (unsigned i = 0; i < m; ++i) frob_p.set(i, j, col.coeffs[i]);
    column = poly_mulmod(column, xp, f, p);
  }
  ctx.frobenius_q_ = std::make_shared<const LinearMap>(map_power(frob_p, s, p, m));

  // Row 0 of sum_{i < m} F^i, accumulated as r <- r * F.
  std::vector<u32> row(m, 0), r(m, 0);
  r[0] = 1;
  for (unsigned i = 0; i < m; ++i) {
    std::vector<u32> next(m, 0);
    for (unsigned j = 0; j < m; ++j) {
      row[j] = (row[j] + r[j]) % p;
      u64 acc = 0;
      for (unsigned k = 0; k < m; ++k) acc = (acc + u64{r[k]} * frob_p.at(k, j)) % p;
      next[j] = static_cast<u32>(acc);
    }
    r = std::move(next);
  }
  ctx.absolute_trace_row_ = std::make_shared<const std::vector<u32>>(std::move(row));

  if (ctx.size_ <= opts.table_ceiling) {
    const u64 count = static_cast<u64>(ctx.size_);
    for (u64 code = 1; code < count; ++code) {
      FieldElement candidate = ctx.decode(code);
      if (is_primitive_by_powers(ctx, candidate)) {
        ctx.generator_ = std::move(candidate);
        break;
      }
    }
    if (!ctx.generator_) throw InvariantError("build_context: no primitive element found");

    if (opts.build_log_table) {
      auto tables = std::make_shared<FieldContext::Tables>();
      const u64 order = count - 1;
      tables->exp.resize(order);
      tables->log.assign(count, 0);
      const Poly g = to_poly(*ctx.generator_);
      Poly cur{1};
      for (u64 k = 0; k < order; ++k) {
        const u32 code = static_cast<u32>(ctx.encode(to_element(cur, m)));
        tables->exp[k] = code;
        tables->log[code] = static_cast<u32>(k);
        cur = poly_mulmod(cur, g, f, p);
      }
      ctx.tables_ = std::move(tables);
    }
  }
  return ctx;
}

FieldElement add(const FieldContext& ctx, const FieldElement& x, const FieldElement& y) {
  FieldElement out = x;
  for (unsigned i = 0; i < ctx.m(); ++i) out.coeffs[i] = static_cast<u32>((u64{x.coeffs[i]} + y.coeffs[i]) % ctx.p());
  return out;
}

FieldElement sub(const FieldContext& ctx, const FieldElement& x, const FieldElement& y) {
  FieldElement out = x;
  for (unsigned i = 0; i < ctx.m(); ++i) {
    out.coeffs[i] = static_cast<u32>((u64{x.coeffs[i]} + ctx.p() - y.coeffs[i]) % ctx.p());
  }
  return out;
}

FieldElement neg(const FieldContext& ctx, const FieldElement& x) { return sub(ctx, ctx.zero(), x); }

FieldElement scale(const FieldContext& ctx, const FieldElement& x, u32 c) {
  FieldElement out = x;
  for (auto& v : out.coeffs) v = static_cast<u32>(u64{v} * c % ctx.p());
  return out;
}

FieldElement mul(const FieldContext& ctx, const FieldElement& x, const FieldElement& y) {
  return to_element(poly_mulmod(to_poly(x), to_poly(y), ctx.defining_poly(), ctx.p()), ctx.m());
}

FieldElement pow(const FieldContext& ctx, const FieldElement& x, const BigInt& e) {
  if (e < 0) throw Error(Errc::invalid_argument, "pow: negative exponent");
  if (x.is_zero()) return e == 0 ? ctx.one() : ctx.zero();
  const BigInt reduced = e % ctx.order();
  return to_element(poly_powmod(to_poly(x), reduced, ctx.defining_poly(), ctx.p()), ctx.m());
}

FieldElement inv(const FieldContext& ctx, const FieldElement& x) {
  if (x.is_zero()) throw Error(Errc::domain_error, "inv: zero has no inverse");
  return pow(ctx, x, ctx.order() - 1);
}

FieldElement frobenius(const FieldContext& ctx, const FieldElement& x, u64 j) {
  FieldElement out = x;
  for (u64 i = 0; i < j % ctx.n(); ++i) out = ctx.frobenius_map().apply(out);
  return out;
}

FieldElement relative_trace(const FieldContext& ctx, const FieldElement& x, unsigned from, unsigned to) {
  require_divisor(ctx, from, "relative_trace");
  if (to == 0 || from % to != 0) {
    throw Error(Errc::not_divisor, "relative_trace: " + std::to_string(to) + " does not divide " +
                                       std::to_string(from));
  }
  FieldElement sum = ctx.zero();
  FieldElement term = x;
  for (unsigned i = 0; i < from / to; ++i) {
    sum = add(ctx, sum, term);
    term = frobenius(ctx, term, to);
  }
  return sum;
}

FieldElement trace(const FieldContext& ctx, const FieldElement& x, unsigned d) {
  require_divisor(ctx, d, "trace");
  return relative_trace(ctx, x, ctx.n(), d);
}

bool in_subfield(const FieldContext& ctx, const FieldElement& x, unsigned d) {
  require_divisor(ctx, d, "in_subfield");
  return frobenius(ctx, x, d) == x;
}

bool is_primitive_by_powers(const FieldContext& ctx, const FieldElement& x) {
  if (x.is_zero()) return false;
  for (const auto& pe : ctx.order_factorization().factors) {
    if (pow(ctx, x, ctx.order() / pe.prime) == ctx.one()) return false;
  }
  return true;
}

bool is_primitive(const FieldContext& ctx, const FieldElement& x) {
  if (x.is_zero()) return false;
  if (ctx.has_log_table()) {
    const u64 order = static_cast<u64>(ctx.order());
    return std::gcd(ctx.dlog(x), order) == 1;
  }
  return is_primitive_by_powers(ctx, x);
}

BigInt multiplicative_order(const FieldContext& ctx, const FieldElement& x) {
  if (x.is_zero()) throw Error(Errc::domain_error, "multiplicative_order: zero");
  BigInt ord = ctx.order();
  for (const auto& pe : ctx.order_factorization().factors) {
    for (unsigned i = 0; i < pe.exponent; ++i) {
      if (pow(ctx, x, ord / pe.prime) != ctx.one()) break;
      ord /= pe.prime;
    }
  }
  return ord;
}

FieldElement subfield_generator(const FieldContext& ctx, unsigned d) {
  require_divisor(ctx, d, "subfield_generator");
  if (d == ctx.n() && ctx.generator()) return *ctx.generator();
  const BigInt sub_order = nt::pow(BigInt(ctx.q()), d) - 1;
  const BigInt exponent = ctx.order() / sub_order;
  const auto sub_factors = nt::factorize_power_minus_one(ctx.q(), d, ctx.options().factor);
  for (u64 code = 1; BigInt(code) < ctx.size(); ++code) {
    const FieldElement y = pow(ctx, ctx.decode(code), exponent);
    if (y.is_zero()) continue;
    bool generates = true;
    for (const auto& pe : sub_factors.factors) {
      if (pow(ctx, y, sub_order / pe.prime) == ctx.one()) {
        generates = false;
        break;
      }
    }
    if (generates) return y;
  }
  throw InvariantError("subfield_generator: none found");
}

std::vector<FieldElement> subfield_elements(const FieldContext& ctx, unsigned d) {
  const FieldElement g = subfield_generator(ctx, d);
  const u64 count = static_cast<u64>(nt::pow(BigInt(ctx.q()), d));
  std::vector<FieldElement> out;
  out.reserve(count);
  out.push_back(ctx.zero());
  FieldElement cur = ctx.one();
  for (u64 i = 1; i < count; ++i) {
    out.push_back(cur);
    cur = mul(ctx, cur, g);
  }
  std::sort(out.begin(), out.end(), encoding_less);
  return out;
}

ElementRange::iterator::iterator(u32 p, unsigned m, u64 index, u64 end) : p_(p), index_(index), end_(end) {
  current_.coeffs.assign(m, 0);
  u64 v = index;
  for (unsigned i = 0; i < m && v > 0; ++i) {
    current_.coeffs[i] = static_cast<u32>(v % p);
    v /= p;
  }
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  ++index_;
  if (index_ >= end_) return *this;
  for (auto& c : current_.coeffs) {
    if (++c < p_) break;
    c = 0;
  }
  return *this;
}

ElementRange enumerate(const FieldContext& ctx) {
  if (!ctx.enumerable()) throw Error(Errc::resource_limit, "enumerate: field exceeds the enumeration ceiling");
  return ElementRange(ctx.p(), ctx.m(), static_cast<u64>(ctx.size()));
}

void map_all_elements(const FieldContext& ctx, const LinearMap& map,
                      const std::function<void(u32, std::span<const u32>)>& sink) {
  if (!ctx.enumerable() || ctx.size() > BigInt(~u32{0})) {
    throw Error(Errc::resource_limit, "map_all_elements: field exceeds the enumeration ceiling");
  }
  const u64 count = static_cast<u64>(ctx.size());
  constexpr u64 kBatch = 4096;
  std::vector<u32> codes(kBatch), images(kBatch);
  for (u64 first = 0; first < count; first += kBatch) {
    const std::size_t len = static_cast<std::size_t>(std::min(kBatch, count - first));
    std::iota(codes.begin(), codes.begin() + len, static_cast<u32>(first));
    kernels::apply_linear_map(map.view(), std::span<const u32>(codes.data(), len), std::span<u32>(images.data(), len));
    sink(static_cast<u32>(first), std::span<const u32>(images.data(), len));
  }
}

}  // namespace primtrace::gf
