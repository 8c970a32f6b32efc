#include "primtrace/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include <fftw3.h>

#include "primtrace/error.hpp"

namespace primtrace::cs {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

template <class T>
T pairwise(std::span<const T> terms) {
  if (terms.size() <= 8) {
    T acc{};
    for (const T& t : terms) acc += t;
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise(terms.first(half)) + pairwise(terms.subspan(half));
}

// Coordinates of an encoding, least significant first.
void digits_of(u32 code, u32 p, std::vector<u32>& out) {
  for (auto& d : out) {
    d = code % p;
    code /= p;
  }
}

u32 dot_mod(const std::vector<u32>& row, const std::vector<u32>& coords, u32 p) {
  u64 acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) acc += u64{row[i]} * coords[i];
  return static_cast<u32>(acc % p);
}

std::vector<u32> functional_row(const gf::FieldContext& ctx, const gf::FieldElement& c) {
  // row[j] = T(c * x^j)
  const auto& trace_row = ctx.absolute_trace_row();
  std::vector<u32> row(ctx.m());
  gf::FieldElement basis = ctx.one();
  const gf::FieldElement x = ctx.x_class();
  for (unsigned j = 0; j < ctx.m(); ++j) {
    row[j] = dot_mod(trace_row, gf::mul(ctx, c, basis).coeffs, ctx.p());
    basis = gf::mul(ctx, basis, x);
  }
  return row;
}

void require_small(const gf::FieldContext& ctx, const char* op) {
  if (ctx.size() > BigInt(u64{1} << 14)) {
    throw Error(Errc::resource_limit, std::string(op) + ": field too large for a full character expansion");
  }
}

}  // namespace

ComplexValue pairwise_sum(std::span<const ComplexValue> terms) { return pairwise(terms); }
double pairwise_sum(std::span<const double> terms) { return pairwise(terms); }

CharacterTable::CharacterTable(const gf::FieldContext& ctx) : ctx_(&ctx) {
  if (!ctx.has_log_table()) throw Error(Errc::not_applicable, "CharacterTable: context has no discrete-log table");
  group_order_ = static_cast<u64>(ctx.order());
  theta_ = static_cast<double>(nt::euler_phi(group_order_)) / static_cast<double>(group_order_);
  const double tau = 2.0 * std::numbers::pi;
  unity_n_.resize(group_order_);
  for (u64 k = 0; k < group_order_; ++k) {
    unity_n_[k] = std::polar(1.0, tau * static_cast<double>(k) / static_cast<double>(group_order_));
  }
  unity_p_.resize(ctx.p());
  for (u32 k = 0; k < ctx.p(); ++k) unity_p_[k] = std::polar(1.0, tau * k / ctx.p());
  for (u64 t : nt::divisors(group_order_)) {
    if (const int mu = nt::mobius(t); mu != 0) squarefree_.emplace_back(t, mu);
  }
}

ComplexValue MultCharacter::at_code(u32 code) const {
  if (code == 0) return 0.0;
  const u64 e = table_->ctx().dlog_encoded(code);
  const u64 n = table_->group_order();
  return table_->root_of_group_order(static_cast<u64>((static_cast<unsigned __int128>(exponent_) * e) % n));
}

ComplexValue MultCharacter::operator()(const gf::FieldElement& x) const {
  return at_code(static_cast<u32>(table_->ctx().encode(x)));
}

u32 AddCharacter::trace_value(const gf::FieldElement& x) const { return dot_mod(row_, x.coeffs, table_->ctx().p()); }

ComplexValue AddCharacter::operator()(const gf::FieldElement& x) const { return table_->root_of_p(trace_value(x)); }

ComplexValue AddCharacter::at_code(u32 code) const {
  std::vector<u32> coords(row_.size());
  digits_of(code, table_->ctx().p(), coords);
  return table_->root_of_p(dot_mod(row_, coords, table_->ctx().p()));
}

MultCharacter mult_character(const CharacterTable& table, u64 t, u64 index) {
  const u64 n = table.group_order();
  if (t == 0 || n % t != 0) {
    throw Error(Errc::not_divisor, "mult_character: " + std::to_string(t) + " does not divide " + std::to_string(n));
  }
  if (index >= nt::euler_phi(t)) throw Error(Errc::invalid_argument, "mult_character: index out of range");
  // index-th j in [1, t] coprime to t; eta has exponent j * N / t.
  u64 seen = 0;
  for (u64 j = 1; j <= t; ++j) {
    if (std::gcd(j, t) != 1) continue;
    if (seen++ == index) return MultCharacter(table, (j * (n / t)) % n, t);
  }
  throw InvariantError("mult_character: ran out of residues");
}

std::vector<MultCharacter> characters_of_order(const CharacterTable& table, u64 t) {
  const u64 n = table.group_order();
  if (t == 0 || n % t != 0) {
    throw Error(Errc::not_divisor, "characters_of_order: " + std::to_string(t) + " does not divide " + std::to_string(n));
  }
  std::vector<MultCharacter> out;
  for (u64 j = 1; j <= t; ++j) {
    if (std::gcd(j, t) == 1) out.emplace_back(table, (j * (n / t)) % n, t);
  }
  return out;
}

AddCharacter add_character(const CharacterTable& table, const gf::FieldElement& c) {
  return AddCharacter(table, functional_row(table.ctx(), c));
}

ComplexValue gauss_sum(const CharacterTable& table, const MultCharacter& eta, const gf::FieldElement& c) {
  const auto chi = add_character(table, c);
  const u64 size = table.field_size();
  std::vector<ComplexValue> terms(size);
  for (u64 code = 0; code < size; ++code) {
    terms[code] = eta.at_code(static_cast<u32>(code)) * chi.at_code(static_cast<u32>(code));
  }
  return pairwise_sum(terms);
}

std::vector<ComplexValue> gauss_sum_spectrum(const CharacterTable& table, const gf::FieldElement& c) {
  const auto& ctx = table.ctx();
  const auto chi = add_character(table, c);
  const u64 n = table.group_order();
  // fftw_complex is layout-compatible with std::complex<double>.
  std::vector<ComplexValue> in(n), out(n);
  for (u64 e = 0; e < n; ++e) in[e] = chi.at_code(ctx.exp_encoded(e));
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

double primitive_indicator_via_sum(const CharacterTable& table, const gf::FieldElement& beta) {
  if (beta.is_zero()) return 0.0;
  const u64 n = table.group_order();
  const u64 e = table.ctx().dlog(beta);
  std::vector<double> terms;
  for (const auto& [t, mu] : table.squarefree_divisors()) {
    std::vector<ComplexValue> inner;
    for (u64 j = 1; j <= t; ++j) {
      if (std::gcd(j, t) != 1) continue;
      const u64 u = j * (n / t) % n;
      inner.push_back(table.root_of_group_order(static_cast<u64>((static_cast<unsigned __int128>(u) * e) % n)));
    }
    terms.push_back(mu * pairwise_sum(inner).real() / static_cast<double>(nt::euler_phi(t)));
  }
  return table.theta() * pairwise_sum(terms);
}

gf::FieldElement trace_reference(const gf::FieldContext& ctx, unsigned d, const gf::FieldElement& a) {
  if (!gf::in_subfield(ctx, a, d)) {
    throw Error(Errc::not_in_subfield, "trace_reference: target is not in GF(q^" + std::to_string(d) + ")");
  }
  for (const auto& x : gf::enumerate(ctx)) {
    if (gf::trace(ctx, x, d) == a) return x;
  }
  throw InvariantError("trace_reference: trace map is not onto");
}

double trace_indicator_via_sum(const CharacterTable& table, const gf::FieldElement& beta, unsigned d,
                               const gf::FieldElement& gamma) {
  const auto& ctx = table.ctx();
  const auto delta = gf::sub(ctx, beta, gamma);
  const auto sub = gf::subfield_elements(ctx, d);
  std::vector<ComplexValue> terms;
  terms.reserve(sub.size());
  for (const auto& c : sub) terms.push_back(add_character(table, c)(delta));
  return pairwise_sum(terms).real() / static_cast<double>(sub.size());
}

std::vector<double> trace_indicator_table(const CharacterTable& table, unsigned d) {
  const auto& ctx = table.ctx();
  const u32 p = ctx.p();
  const auto sub = gf::subfield_elements(ctx, d);
  std::vector<std::vector<u32>> rows;
  rows.reserve(sub.size());
  for (const auto& c : sub) rows.push_back(functional_row(ctx, c));

  const u64 size = table.field_size();
  std::vector<double> out(size);
  std::vector<u32> coords(ctx.m());
  std::vector<ComplexValue> terms(sub.size());
  for (u64 code = 0; code < size; ++code) {
    digits_of(static_cast<u32>(code), p, coords);
    for (std::size_t i = 0; i < rows.size(); ++i) terms[i] = table.root_of_p(dot_mod(rows[i], coords, p));
    out[code] = pairwise_sum(terms).real() / static_cast<double>(sub.size());
  }
  return out;
}

CharacterCount count_via_character_formula(const CharacterTable& table, const tl::TraceSpec& spec) {
  const auto& ctx = table.ctx();
  if (!spec.admissible) throw Error(Errc::invalid_argument, "count_via_character_formula: spec is not admissible");
  if (spec.tuple.n() != ctx.n()) throw Error(Errc::invalid_argument, "count_via_character_formula: degree mismatch");
  require_small(ctx, "count_via_character_formula");
  const BigInt qD = nt::pow(BigInt(ctx.q()), spec.tuple.D());
  if (qD > BigInt(u64{1} << 16)) {
    throw Error(Errc::resource_limit, "count_via_character_formula: q^D exceeds 2^16");
  }
  const u64 n_order = table.group_order();

  // beta_hat: an element carrying every prescribed trace.
  std::vector<u32> want;
  for (const auto& a : spec.targets) want.push_back(static_cast<u32>(ctx.encode(a)));
  std::optional<u32> beta_code;
  tl::sweep_traces(ctx, spec.tuple.entries(), [&](u32 code, std::span<const u32> traces) {
    if (!beta_code && std::equal(traces.begin(), traces.end(), want.begin())) beta_code = code;
  });
  if (!beta_code) throw InvariantError("count_via_character_formula: admissible spec with an empty fiber");
  const auto minus_beta = gf::neg(ctx, ctx.decode(*beta_code));

  // How many c in F(d) share each value of s(c) = c_1 + ... + c_k.
  std::vector<std::vector<gf::FieldElement>> fields;
  for (unsigned d : spec.tuple.entries()) fields.push_back(gf::subfield_elements(ctx, d));
  std::map<u32, u64> multiplicity;
  {
    const std::size_t k = fields.size();
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      gf::FieldElement s = ctx.zero();
      for (std::size_t i = 0; i < k; ++i) s = gf::add(ctx, s, fields[i][idx[i]]);
      ++multiplicity[static_cast<u32>(ctx.encode(s))];
      std::size_t i = 0;
      while (i < k && ++idx[i] == fields[i].size()) idx[i++] = 0;
      if (i == k) break;
    }
  }

  // Characters of squarefree order with weight mu(t)/phi(t); only these
  // contribute. Gauss sums against chi_0 and chi_1 by direct summation.
  struct Weighted {
    u64 exponent;
    double weight;
    bool trivial;
  };
  std::vector<Weighted> chars;
  for (const auto& [t, mu] : table.squarefree_divisors()) {
    const double w = mu / static_cast<double>(nt::euler_phi(t));
    for (const auto& eta : characters_of_order(table, t)) chars.push_back({eta.exponent(), w, t == 1});
  }
  const auto spectrum0 = gauss_sum_spectrum(table, ctx.zero());
  const auto spectrum1 = gauss_sum_spectrum(table, ctx.one());
  std::vector<ComplexValue> g0(chars.size()), g1(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    g0[i] = spectrum0[chars[i].exponent];
    g1[i] = spectrum1[chars[i].exponent];
  }

  std::vector<ComplexValue> full_terms, s_terms;
  std::vector<ComplexValue> inner(chars.size()), inner_nontrivial;
  for (const auto& [s_code, mult] : multiplicity) {
    const double weight = static_cast<double>(mult);
    if (s_code == 0) {
      for (std::size_t i = 0; i < chars.size(); ++i) inner[i] = chars[i].weight * g0[i];
      full_terms.push_back(weight * pairwise_sum(inner));
      continue;
    }
    // G(eta, chi_s) = conj(eta(s)) G(eta, chi_1) for s != 0.
    const u64 es = ctx.dlog_encoded(s_code);
    inner_nontrivial.clear();
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const u64 k = static_cast<u64>((static_cast<unsigned __int128>(chars[i].exponent) * es) % n_order);
      inner[i] = chars[i].weight * std::conj(table.root_of_group_order(k)) * g1[i];
      if (!chars[i].trivial) inner_nontrivial.push_back(inner[i]);
    }
    const auto chi_s = add_character(table, ctx.decode(s_code));
    const ComplexValue phase = chi_s(minus_beta);
    full_terms.push_back(weight * phase * pairwise_sum(inner));
    s_terms.push_back(weight * phase * pairwise_sum(inner_nontrivial));
  }

  CharacterCount out;
  out.full_expansion = pairwise_sum(full_terms);
  out.s_term = pairwise_sum(s_terms);
  out.main_term = std::pow(static_cast<double>(ctx.q()),
                           static_cast<double>(ctx.n()) + spec.tuple.D() - static_cast<double>(spec.tuple.lambda()));
  out.residual = out.full_expansion - (out.main_term + out.s_term);
  out.count = table.theta() * out.full_expansion.real() / static_cast<double>(qD);
  return out;
}

STermBound s_term_bound_check(const CharacterTable& table, const tl::TraceSpec& spec) {
  const auto& ctx = table.ctx();
  const auto c = count_via_character_formula(table, spec);
  STermBound out;
  out.s_abs = std::abs(c.s_term);
  out.main_term = c.main_term;
  const double w = static_cast<double>(nt::squarefree_divisor_count(ctx.order_factorization()));
  out.bound = std::pow(static_cast<double>(ctx.q()), ctx.n() / 2.0 + spec.tuple.D()) * w;
  out.holds = out.s_abs < out.bound;
  return out;
}

}  // namespace primtrace::cs
