#include "setalg/carrier.hpp"

#include <limits>

#include "setalg/error.hpp"

namespace setalg {

namespace {

constexpr std::int64_t kMaxRationalBound = std::int64_t{1} << 30;

std::uint64_t reduce(std::int64_t v, std::uint32_t n) {
  const std::int64_t m = static_cast<std::int64_t>(n);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

Carrier::Carrier(CarrierKind kind, std::uint32_t n, std::uint32_t rows, std::uint32_t cols,
                 std::int64_t bound)
    : kind_(kind), modulus_(n), rows_(rows), cols_(cols), bound_(bound) {
  if (is_zmod()) {
    if (n < 2) fail(ErrorCode::invalid_structure, "modulus must be at least 2");
    if (rows == 0 || cols == 0) fail(ErrorCode::invalid_structure, "carrier shape must be positive");
    // n^entries must stay addressable by a 64-bit code.
    unsigned __int128 size = 1;
    for (std::uint32_t i = 0; i < rows * cols; ++i) {
      size *= n;
      if (size > (static_cast<unsigned __int128>(1) << 63))
        fail(ErrorCode::carrier_too_large, "carrier " + name() + " has more than 2^63 elements");
    }
  } else if (bound < 1 || bound > kMaxRationalBound) {
    fail(ErrorCode::invalid_structure, "rational bound must lie in [1, 2^30]");
  }
}

Carrier Carrier::zmod(std::uint32_t n) { return {CarrierKind::zmod_scalar, n, 1, 1, 0}; }

Carrier Carrier::zmod_tuple(std::uint32_t n, std::uint32_t length) {
  return {CarrierKind::zmod_tuple, n, 1, length, 0};
}

Carrier Carrier::zmod_matrix(std::uint32_t n, std::uint32_t rows, std::uint32_t cols) {
  return {CarrierKind::zmod_matrix, n, rows, cols, 0};
}

Carrier Carrier::zmod_poly(std::uint32_t n, std::uint32_t max_degree) {
  return {CarrierKind::zmod_poly, n, 1, max_degree + 1, 0};
}

Carrier Carrier::bounded_rational(std::int64_t bound) {
  return {CarrierKind::bounded_rational, 2, 1, 1, bound};
}

std::uint64_t Carrier::cardinality() const {
  if (!is_zmod()) fail(ErrorCode::carrier_too_large, "bounded rational carriers are not enumerated");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < entry_count(); ++i) size *= modulus_;
  return size;
}

std::string Carrier::name() const {
  const std::string n = std::to_string(modulus_);
  switch (kind_) {
    case CarrierKind::zmod_scalar:
      return "zmod(" + n + ")";
    case CarrierKind::zmod_tuple:
      return "zmod_tuple(" + n + "," + std::to_string(cols_) + ")";
    case CarrierKind::zmod_matrix:
      return "zmod_matrix(" + n + "," + std::to_string(rows_) + "," + std::to_string(cols_) + ")";
    case CarrierKind::zmod_poly:
      return "zmod_poly(" + n + "," + std::to_string(cols_ - 1) + ")";
    case CarrierKind::bounded_rational:
      return "rational(" + std::to_string(bound_) + ")";
  }
  return {};
}

Code Carrier::zero() const {
  if (is_zmod()) return 0;
  return *encode_rational(Rational(0));
}

std::optional<Code> Carrier::try_add(Code a, Code b) const {
  if (is_rational()) {
    auto sum = Rational::checked_add(rational(a), rational(b));
    if (!sum) return std::nullopt;
    return encode_rational(*sum);
  }
  const std::uint64_t n = modulus_;
  if (entry_count() == 1) {
    const std::uint64_t s = a + b;
    return s >= n ? s - n : s;
  }
  Code result = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < entry_count(); ++i) {
    std::uint64_t d = a % n + b % n;
    if (d >= n) d -= n;
    result += d * place;
    place *= n;
    a /= n;
    b /= n;
  }
  return result;
}

std::optional<Code> Carrier::try_neg(Code a) const {
  if (is_rational()) return encode_rational(Rational(-rational(a).num(), rational(a).den()));
  const std::uint64_t n = modulus_;
  Code result = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < entry_count(); ++i) {
    const std::uint64_t d = a % n;
    result += (d == 0 ? 0 : n - d) * place;
    place *= n;
    a /= n;
  }
  return result;
}

bool Carrier::accepts_scalars(const Carrier& scalars) const noexcept {
  if (!scalars.is_scalar()) return false;
  return scalars.is_rational() == is_rational();
}

std::optional<Code> Carrier::try_act(const Carrier& scalars, Code s, Code v) const {
  if (!accepts_scalars(scalars))
    fail(ErrorCode::incompatible_carrier,
         "scalars from " + scalars.name() + " do not act on " + name());
  if (is_rational()) {
    auto prod = Rational::checked_mul(scalars.rational(s), rational(v));
    if (!prod) return std::nullopt;
    return encode_rational(*prod);
  }
  const std::uint64_t n = modulus_;
  const std::uint64_t r = s % n;  // representative of s reduced into this modulus
  if (entry_count() == 1) return (r * v) % n;
  Code result = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < entry_count(); ++i) {
    result += ((v % n) * r % n) * place;
    place *= n;
    v /= n;
  }
  return result;
}

std::strong_ordering Carrier::compare(Code a, Code b) const noexcept {
  if (is_zmod()) return a <=> b;
  return rational(a) <=> rational(b);
}

std::vector<std::int64_t> Carrier::entries(Code c) const {
  if (is_rational()) {
    const Rational q = rational(c);
    if (!q.is_integer()) fail(ErrorCode::incompatible_carrier, "rational element has no integer entries");
    return {q.num()};
  }
  std::vector<std::int64_t> out(entry_count());
  for (std::uint32_t i = entry_count(); i-- > 0;) {
    out[i] = static_cast<std::int64_t>(c % modulus_);
    c /= modulus_;
  }
  return out;
}

Code Carrier::encode(std::span<const std::int64_t> values) const {
  if (is_rational()) {
    if (values.size() != 1) fail(ErrorCode::shape_mismatch, "rational literal takes one value");
    auto code = encode_rational(Rational(values[0]));
    if (!code) fail(ErrorCode::out_of_bounds, std::to_string(values[0]) + " exceeds " + name());
    return *code;
  }
  if (values.size() != entry_count())
    fail(ErrorCode::shape_mismatch, "expected " + std::to_string(entry_count()) + " entries for " + name() +
                                        ", got " + std::to_string(values.size()));
  Code code = 0;
  for (const auto v : values) code = code * modulus_ + reduce(v, modulus_);
  return code;
}

Rational Carrier::rational(Code c) const {
  if (is_zmod()) {
    if (entry_count() != 1) fail(ErrorCode::incompatible_carrier, name() + " elements are not scalars");
    return Rational(static_cast<std::int64_t>(c));
  }
  const auto width = static_cast<std::uint64_t>(bound_ + 1);
  const auto num = static_cast<std::int64_t>(c / width) - bound_;
  const auto den = static_cast<std::int64_t>(c % width);
  return Rational(num, den);
}

bool Carrier::holds(const Rational& q) const noexcept {
  if (is_zmod()) return false;
  return q.num() >= -bound_ && q.num() <= bound_ && q.den() <= bound_;
}

std::optional<Code> Carrier::encode_rational(const Rational& q) const {
  if (is_zmod()) {
    if (entry_count() != 1 || !q.is_integer()) return std::nullopt;
    return reduce(q.num(), modulus_);
  }
  if (!holds(q)) return std::nullopt;
  const auto width = static_cast<std::uint64_t>(bound_ + 1);
  return static_cast<std::uint64_t>(q.num() + bound_) * width + static_cast<std::uint64_t>(q.den());
}

std::string Carrier::format(Code c) const {
  if (is_rational()) return rational(c).to_string();
  const auto e = entries(c);
  auto join = [&](std::size_t from, std::size_t count) {
    std::string s;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) s += ',';
      s += std::to_string(e[from + i]);
    }
    return s;
  };
  switch (kind_) {
    case CarrierKind::zmod_scalar:
      return std::to_string(e[0]);
    case CarrierKind::zmod_tuple:
      return "(" + join(0, e.size()) + ")";
    case CarrierKind::zmod_poly:
      return "poly(" + join(0, e.size()) + ")";
    case CarrierKind::zmod_matrix: {
      std::string s = "[";
      for (std::uint32_t r = 0; r < rows_; ++r) {
        if (r) s += ';';
        s += "[" + join(static_cast<std::size_t>(r) * cols_, cols_) + "]";
      }
      return s + "]";
    }
    case CarrierKind::bounded_rational:
      break;
  }
  return {};
}

Element Element::of(const Carrier& carrier, std::initializer_list<std::int64_t> entries) {
  return of(carrier, std::span<const std::int64_t>(entries.begin(), entries.size()));
}

Element Element::of(const Carrier& carrier, std::span<const std::int64_t> entries) {
  return {carrier, carrier.encode(entries)};
}

Element Element::of_rational(const Carrier& carrier, const Rational& q) {
  auto code = carrier.encode_rational(q);
  if (!code) fail(ErrorCode::out_of_bounds, q.to_string() + " is not an element of " + carrier.name());
  return {carrier, *code};
}

Element element_mul(const Element& s, const Element& v) {
  if (!s.carrier().is_scalar())
    fail(ErrorCode::incompatible_carrier, s.carrier().name() + " elements cannot act as scalars");
  auto r = v.carrier().try_act(s.carrier(), s.code(), v.code());
  if (!r) fail(ErrorCode::out_of_bounds, s.to_string() + "·" + v.to_string() + " leaves " + v.carrier().name());
  return {v.carrier(), *r};
}

Element element_add(const Element& u, const Element& v) {
  if (u.carrier() != v.carrier())
    fail(ErrorCode::incompatible_carrier, "cannot add " + u.carrier().name() + " and " + v.carrier().name());
  auto r = u.carrier().try_add(u.code(), v.code());
  if (!r) fail(ErrorCode::out_of_bounds, u.to_string() + "+" + v.to_string() + " leaves " + u.carrier().name());
  return {u.carrier(), *r};
}

Element element_neg(const Element& v) {
  auto r = v.carrier().try_neg(v.code());
  if (!r) fail(ErrorCode::out_of_bounds, "-" + v.to_string() + " leaves " + v.carrier().name());
  return {v.carrier(), *r};
}

std::strong_ordering canonical_cmp(const Element& u, const Element& v) {
  if (u.carrier() != v.carrier())
    fail(ErrorCode::incompatible_carrier, "cannot compare " + u.carrier().name() + " and " + v.carrier().name());
  return u.carrier().compare(u.code(), v.code());
}

}  // namespace setalg
