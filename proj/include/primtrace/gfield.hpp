#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "primtrace/kernels.hpp"
#include "primtrace/numtheory.hpp"

namespace primtrace::gf {

// Polynomial-basis coordinates over GF(p); coeffs[i] is the coefficient of x^i.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  bool is_zero() const;
  bool operator==(const FieldElement&) const = default;
  auto operator<=>(const FieldElement&) const = default;
};

struct ElementHash {
  std::size_t operator()(const FieldElement& x) const noexcept;
};

// Dense m x m matrix over GF(p) acting on coordinate vectors.
class LinearMap {
 public:
  LinearMap(std::uint32_t p, unsigned m);
  static LinearMap identity(std::uint32_t p, unsigned m);

  std::uint32_t at(unsigned row, unsigned col) const { return entries_[std::size_t{row} * m_ + col]; }
  void set(unsigned row, unsigned col, std::uint32_t v) { entries_[std::size_t{row} * m_ + col] = v; }

  FieldElement apply(const FieldElement& x) const;
  LinearMap then(const LinearMap& next) const;  // next ∘ this
  LinearMap plus(const LinearMap& other) const;
  kernels::LinearMapView view() const { return {p_, m_, entries_}; }

  bool operator==(const LinearMap&) const = default;

 private:
  std::uint32_t p_;
  unsigned m_;
  std::vector<std::uint32_t> entries_;
};

struct ContextOptions {
  std::uint64_t enumeration_ceiling = std::uint64_t{1} << 22;
  std::uint64_t table_ceiling = std::uint64_t{1} << 22;
  bool build_log_table = true;
  nt::FactorOptions factor;
};

// GF(p^m), m = s*n, seen as a degree-n extension of GF(q), q = p^s.
// Immutable after build_context; copies share the tables.
class FieldContext {
 public:
  std::uint32_t p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  const BigInt& size() const { return size_; }    // p^m
  const BigInt& order() const { return order_; }  // p^m - 1
  const std::vector<std::uint32_t>& defining_poly() const { return defining_poly_; }
  const nt::Factorization& order_factorization() const { return order_factorization_; }
  const std::optional<FieldElement>& generator() const { return generator_; }
  const ContextOptions& options() const { return options_; }

  bool enumerable() const { return size_ <= options_.enumeration_ceiling; }
  bool has_log_table() const { return tables_ != nullptr; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(std::uint32_t c) const;
  FieldElement x_class() const;

  // Base-p integer encoding; requires p^m < 2^64.
  std::uint64_t encode(const FieldElement& x) const;
  FieldElement decode(std::uint64_t code) const;
  bool belongs(const FieldElement& x) const;

  // Discrete log base generator(); needs the log table, x != 0.
  std::uint64_t dlog(const FieldElement& x) const;
  std::uint64_t dlog_encoded(std::uint32_t code) const;
  std::uint32_t exp_encoded(std::uint64_t k) const;

  // x -> x^q as a GF(p)-linear map.
  const LinearMap& frobenius_map() const { return *frobenius_q_; }
  // x -> Tr_{n/d}(x).
  LinearMap trace_map(unsigned d) const;
  // Row vector of the absolute trace F_{p^m} -> GF(p).
  const std::vector<std::uint32_t>& absolute_trace_row() const { return *absolute_trace_row_; }

  std::string descriptor() const;
  std::string defining_poly_string() const;

 private:
  friend FieldContext build_context(std::uint32_t p, unsigned s, unsigned n, const ContextOptions& opts);

  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[k] = encode(g^k), k < p^m - 1
    std::vector<std::uint32_t> log;  // log[encode(x)], x != 0
  };

  std::uint32_t p_ = 2;
  unsigned s_ = 1, n_ = 1, m_ = 1;
  std::uint64_t q_ = 2;
  BigInt size_, order_;
  std::vector<std::uint32_t> defining_poly_;  // monic, degree m, length m + 1
  nt::Factorization order_factorization_;
  std::optional<FieldElement> generator_;
  ContextOptions options_;
  std::shared_ptr<const LinearMap> frobenius_q_;
  std::shared_ptr<const std::vector<std::uint32_t>> absolute_trace_row_;
  std::shared_ptr<const Tables> tables_;
};

FieldContext build_context(std::uint32_t p, unsigned s, unsigned n, const ContextOptions& opts = {});

// Lexicographically smallest monic irreducible of degree m over GF(p),
// candidates ordered by the base-p value of their lower coefficients.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned m);
bool is_irreducible(const std::vector<std::uint32_t>& monic_poly, std::uint32_t p);

FieldElement add(const FieldContext& ctx, const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldContext& ctx, const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldContext& ctx, const FieldElement& x);
FieldElement mul(const FieldContext& ctx, const FieldElement& x, const FieldElement& y);
FieldElement scale(const FieldContext& ctx, const FieldElement& x, std::uint32_t c);
FieldElement inv(const FieldContext& ctx, const FieldElement& x);
FieldElement pow(const FieldContext& ctx, const FieldElement& x, const BigInt& e);

// x^(q^j).
FieldElement frobenius(const FieldContext& ctx, const FieldElement& x, std::uint64_t j);

// Tr_{n/d}(x) = sum_{i < n/d} x^(q^(d*i)).
FieldElement trace(const FieldContext& ctx, const FieldElement& x, unsigned d);

// Tr from GF(q^from) down to GF(q^to) for x in GF(q^from), computed with
// big-field Frobenius powers. Requires to | from | n.
FieldElement relative_trace(const FieldContext& ctx, const FieldElement& x, unsigned from, unsigned to);

bool in_subfield(const FieldContext& ctx, const FieldElement& x, unsigned d);

bool is_primitive(const FieldContext& ctx, const FieldElement& x);
// Same predicate, always through pow(x, order/r) != 1.
bool is_primitive_by_powers(const FieldContext& ctx, const FieldElement& x);

// Multiplicative order of x != 0 (uses order_factorization).
BigInt multiplicative_order(const FieldContext& ctx, const FieldElement& x);

// A generator of GF(q^d)^*, found by scanning encodings; works without tables.
FieldElement subfield_generator(const FieldContext& ctx, unsigned d);
// The q^d elements of GF(q^d) inside ctx, sorted by encoding order.
std::vector<FieldElement> subfield_elements(const FieldContext& ctx, unsigned d);

class ElementRange {
 public:
  class iterator {
   public:
    using value_type = FieldElement;
    using difference_type = std::ptrdiff_t;
    using reference = const FieldElement&;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::uint32_t p, unsigned m, std::uint64_t index, std::uint64_t end);
    reference operator*() const { return current_; }
    const FieldElement* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator& other) const { return index_ == other.index_; }
    std::uint64_t index() const { return index_; }

   private:
    std::uint32_t p_ = 2;
    std::uint64_t index_ = 0, end_ = 0;
    FieldElement current_;
  };

  ElementRange(std::uint32_t p, unsigned m, std::uint64_t count) : p_(p), m_(m), count_(count) {}
  iterator begin() const { return {p_, m_, 0, count_}; }
  iterator end() const { return {p_, m_, count_, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  std::uint32_t p_;
  unsigned m_;
  std::uint64_t count_;
};

// All p^m elements in encoding order 0, 1, ..., p^m - 1.
ElementRange enumerate(const FieldContext& ctx);

// Applies `map` to every element encoding, in batches through the kernels.
// Calls sink(first_code, span_of_images) per batch. Requires enumerable().
void map_all_elements(const FieldContext& ctx, const LinearMap& map,
                      const std::function<void(std::uint32_t, std::span<const std::uint32_t>)>& sink);

}  // namespace primtrace::gf
