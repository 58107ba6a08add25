#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setalg/rational.hpp"

namespace setalg {

enum class CarrierKind { zmod_scalar, zmod_tuple, zmod_matrix, zmod_poly, bounded_rational };

/// Compact value of one element inside a known carrier.
///
/// For Z_n carriers the code is the mixed-radix number whose most significant
/// digit is entry 0, so numeric order on codes is lexicographic order on the
/// reduced entries. For bounded rationals the code packs numerator and
/// denominator; their canonical order is numeric and goes through
/// `Carrier::compare`.
using Code = std::uint64_t;

/// Finite ground set of elements together with its arithmetic.
///
/// Matrices are stored row-major, polynomials as coefficients c0..c_d. All
/// operations are pure; a carrier is a small value type.
class Carrier {
 public:
  Carrier() = default;

  static Carrier zmod(std::uint32_t n);
  static Carrier zmod_tuple(std::uint32_t n, std::uint32_t length);
  static Carrier zmod_matrix(std::uint32_t n, std::uint32_t rows, std::uint32_t cols);
  static Carrier zmod_poly(std::uint32_t n, std::uint32_t max_degree);
  static Carrier bounded_rational(std::int64_t bound);

  CarrierKind kind() const noexcept { return kind_; }
  bool is_zmod() const noexcept { return kind_ != CarrierKind::bounded_rational; }
  bool is_rational() const noexcept { return kind_ == CarrierKind::bounded_rational; }
  /// Scalar carriers are the ones a ScalarSet may live on.
  bool is_scalar() const noexcept {
    return kind_ == CarrierKind::zmod_scalar || kind_ == CarrierKind::bounded_rational;
  }

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t cols() const noexcept { return cols_; }
  std::uint32_t entry_count() const noexcept { return rows_ * cols_; }
  std::uint32_t max_degree() const noexcept { return cols_ - 1; }
  std::int64_t bound() const noexcept { return bound_; }

  /// Number of elements; only defined for Z_n carriers.
  std::uint64_t cardinality() const;

  /// DSL spelling, e.g. "zmod_matrix(12,2,3)".
  std::string name() const;

  Code zero() const;
  std::optional<Code> try_add(Code a, Code b) const;
  std::optional<Code> try_neg(Code a) const;
  /// Scalar action of `s` (an element of `scalars`) on `v` (an element of this
  /// carrier). A Z_m scalar acts on every Z_n carrier through its canonical
  /// representative in [0, m); bounded rationals act on bounded rationals.
  std::optional<Code> try_act(const Carrier& scalars, Code s, Code v) const;
  bool accepts_scalars(const Carrier& scalars) const noexcept;

  std::strong_ordering compare(Code a, Code b) const noexcept;
  bool less(Code a, Code b) const noexcept { return compare(a, b) < 0; }

  /// Reduced entries of a Z_n element.
  std::vector<std::int64_t> entries(Code c) const;
  /// Encodes arbitrary integers, reducing each into [0, n).
  Code encode(std::span<const std::int64_t> entries) const;
  /// Value of a scalar Z_n element or of any rational element.
  Rational rational(Code c) const;
  std::optional<Code> encode_rational(const Rational& q) const;
  bool holds(const Rational& q) const noexcept;

  /// DSL literal for the element, e.g. "(1,2)", "[[1,0];[0,1]]", "poly(1,1)", "1/3".
  std::string format(Code c) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  Carrier(CarrierKind kind, std::uint32_t n, std::uint32_t rows, std::uint32_t cols,
          std::int64_t bound);

  CarrierKind kind_ = CarrierKind::zmod_scalar;
  std::uint32_t modulus_ = 2;
  std::uint32_t rows_ = 1;
  std::uint32_t cols_ = 1;
  std::int64_t bound_ = 0;
};

/// An element value tagged with its carrier.
class Element {
 public:
  Element() = default;
  Element(const Carrier& carrier, Code code) : carrier_(carrier), code_(code) {}

  static Element zero(const Carrier& carrier) { return {carrier, carrier.zero()}; }
  static Element of(const Carrier& carrier, std::initializer_list<std::int64_t> entries);
  static Element of(const Carrier& carrier, std::span<const std::int64_t> entries);
  static Element of_rational(const Carrier& carrier, const Rational& q);

  const Carrier& carrier() const noexcept { return carrier_; }
  Code code() const noexcept { return code_; }
  std::vector<std::int64_t> entries() const { return carrier_.entries(code_); }
  Rational value() const { return carrier_.rational(code_); }
  bool is_zero() const { return code_ == carrier_.zero(); }
  std::string to_string() const { return carrier_.format(code_); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Carrier carrier_;
  Code code_ = 0;
};

/// Scalar action s·v. Throws incompatible_carrier or out_of_bounds.
Element element_mul(const Element& s, const Element& v);
/// Entrywise (or exact rational) sum. Throws incompatible_carrier or out_of_bounds.
Element element_add(const Element& u, const Element& v);
Element element_neg(const Element& v);
/// Total order within one carrier. Throws incompatible_carrier across carriers.
std::strong_ordering canonical_cmp(const Element& u, const Element& v);

}  // namespace setalg
