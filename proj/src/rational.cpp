#include "setalg/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "setalg/error.hpp"

namespace setalg {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) fail(ErrorCode::invalid_structure, "rational with zero denominator");
  auto r = from_wide(numerator, denominator);
  if (!r) fail(ErrorCode::out_of_bounds, "rational does not fit in 64 bits");
  *this = *r;
}

std::optional<Rational> Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = gcd_wide(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  if (n < lo || n > hi || d > hi) return std::nullopt;
  return raw(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

std::optional<Rational> Rational::checked_add(const Rational& a, const Rational& b) {
  const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  const __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return from_wide(n, d);
}

std::optional<Rational> Rational::checked_mul(const Rational& a, const Rational& b) {
  return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
    std::int64_t v = 0;
    if (s.empty()) return std::nullopt;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return v;
  };
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return from_wide(*n, *d);
}

}  // namespace setalg
