#pragma once

// Numerical check of the character-sum machinery behind the counting
// argument. Nothing here feeds an existence verdict; those are decided by
// exact integer arithmetic in existence.hpp.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "primtrace/gfield.hpp"
#include "primtrace/tracelab.hpp"

namespace primtrace::cs {

using ComplexValue = std::complex<double>;

// Sum in a fixed index-ascending pairwise tree, so results are bit-stable.
ComplexValue pairwise_sum(std::span<const ComplexValue> terms);
double pairwise_sum(std::span<const double> terms);

class CharacterTable;

// eta(g^e) = exp(2 pi i * exponent * e / (q^n - 1)), eta(0) = 0.
class MultCharacter {
 public:
  MultCharacter(const CharacterTable& table, std::uint64_t exponent, std::uint64_t order)
      : table_(&table), exponent_(exponent), order_(order) {}

  ComplexValue operator()(const gf::FieldElement& x) const;
  ComplexValue at_code(std::uint32_t code) const;
  std::uint64_t exponent() const { return exponent_; }
  std::uint64_t order() const { return order_; }
  bool trivial() const { return order_ == 1; }

 private:
  const CharacterTable* table_;
  std::uint64_t exponent_;
  std::uint64_t order_;
};

// chi_c(beta) = exp(2 pi i T(c beta) / p), T the absolute trace to GF(p).
// The functional beta -> T(c beta) is stored as a coordinate row.
class AddCharacter {
 public:
  AddCharacter(const CharacterTable& table, std::vector<std::uint32_t> row) : table_(&table), row_(std::move(row)) {}

  ComplexValue operator()(const gf::FieldElement& x) const;
  ComplexValue at_code(std::uint32_t code) const;
  std::uint32_t trace_value(const gf::FieldElement& x) const;

 private:
  const CharacterTable* table_;
  std::vector<std::uint32_t> row_;
};

class CharacterTable {
 public:
  // Needs a context with a discrete-log table.
  explicit CharacterTable(const gf::FieldContext& ctx);

  const gf::FieldContext& ctx() const { return *ctx_; }
  std::uint64_t group_order() const { return group_order_; }
  std::uint64_t field_size() const { return group_order_ + 1; }
  // phi(N)/N with N = q^n - 1.
  double theta() const { return theta_; }

  ComplexValue root_of_group_order(std::uint64_t k) const { return unity_n_[k % group_order_]; }
  ComplexValue root_of_p(std::uint32_t k) const { return unity_p_[k % unity_p_.size()]; }

  // Squarefree divisors t of N with mu(t).
  const std::vector<std::pair<std::uint64_t, int>>& squarefree_divisors() const { return squarefree_; }

 private:
  const gf::FieldContext* ctx_;
  std::uint64_t group_order_;
  double theta_;
  std::vector<ComplexValue> unity_n_;
  std::vector<ComplexValue> unity_p_;
  std::vector<std::pair<std::uint64_t, int>> squarefree_;
};

// The index-th character of exact order t, index in [0, phi(t)); the
// indices enumerate Gamma(t) once each. Throws not_divisor if t does not
// divide q^n - 1, invalid_argument for an index out of range.
MultCharacter mult_character(const CharacterTable& table, std::uint64_t t, std::uint64_t index);

// Every character of exact order t.
std::vector<MultCharacter> characters_of_order(const CharacterTable& table, std::uint64_t t);

AddCharacter add_character(const CharacterTable& table, const gf::FieldElement& c);

// Sum over every w in the field of eta(w) chi_c(w).
ComplexValue gauss_sum(const CharacterTable& table, const MultCharacter& eta, const gf::FieldElement& c);

// G(eta_u, chi_c) for every exponent u in [0, N) at once, eta_u being
// g^e -> exp(2 pi i u e / N). Computed as one length-N DFT of
// e -> chi_c(g^e), so a full sweep over c costs q^n N log N.
std::vector<ComplexValue> gauss_sum_spectrum(const CharacterTable& table, const gf::FieldElement& c);

// theta * sum_{t | N} mu(t)/phi(t) sum_{eta in Gamma(t)} eta(beta).
double primitive_indicator_via_sum(const CharacterTable& table, const gf::FieldElement& beta);

// An element whose Tr_{n/d} equals a (first in encoding order).
gf::FieldElement trace_reference(const gf::FieldContext& ctx, unsigned d, const gf::FieldElement& a);

// (1/q^d) sum_{c in GF(q^d)} chi_c(beta - gamma), gamma a reference with
// Tr_{n/d}(gamma) = a.
double trace_indicator_via_sum(const CharacterTable& table, const gf::FieldElement& beta, unsigned d,
                               const gf::FieldElement& gamma);

// The same sum for every delta = beta - gamma at once, indexed by
// encode(delta). One pass costs q^n * q^d character evaluations.
std::vector<double> trace_indicator_table(const CharacterTable& table, unsigned d);

struct CharacterCount {
  double count = 0;                // N recovered from the full expansion
  ComplexValue full_expansion;     // sum_c sum_t sum_eta chi(-beta) G
  double main_term = 0;            // q^(n + D - lambda)
  ComplexValue s_term;             // the s(c) != 0, t != 1 part
  // full_expansion - (main_term + s_term): what the simplified Gauss-sum
  // values (q^n and 0 for trivial eta) leave out.
  ComplexValue residual;
};

// Evaluates q^D N / theta through Gauss sums without the simplified
// orthogonality values. Requires an admissible spec, q^n <= 2^14 and
// q^D <= 2^16 (resource_limit otherwise).
CharacterCount count_via_character_formula(const CharacterTable& table, const tl::TraceSpec& spec);

struct STermBound {
  double s_abs = 0;
  double bound = 0;       // q^(n/2 + D) * W(q^n - 1)
  double main_term = 0;
  bool holds = false;     // s_abs < bound
};

STermBound s_term_bound_check(const CharacterTable& table, const tl::TraceSpec& spec);

}  // namespace primtrace::cs
