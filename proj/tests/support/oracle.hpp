#pragma once

// Reference computations that share no code with the library beyond the
// carrier encoding. Each one enumerates naively.

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "setalg/algebra.hpp"
#include "setalg/carrier.hpp"
#include "setalg/rational.hpp"

namespace oracle {

using setalg::Carrier;
using setalg::Code;
using big = boost::multiprecision::cpp_int;

inline std::int64_t reduce(const big& x, std::uint32_t n) {
  big r = x % n;
  if (r < 0) r += n;
  return r.convert_to<std::int64_t>();
}

/// Entrywise s*v with big integers.
inline std::vector<std::int64_t> mul(std::int64_t s, const std::vector<std::int64_t>& v, std::uint32_t n) {
  std::vector<std::int64_t> out;
  for (auto x : v) out.push_back(reduce(big(s) * big(x), n));
  return out;
}

inline std::vector<std::int64_t> add(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v,
                                     std::uint32_t n) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(reduce(big(u[i]) + big(v[i]), n));
  return out;
}

/// Product of two rationals p1/q1 * p2/q2 in lowest terms.
inline std::pair<big, big> rat_mul(big p1, big q1, big p2, big q2) {
  big p = p1 * p2, q = q1 * q2;
  big g = boost::multiprecision::gcd(p < 0 ? big(-p) : p, q);
  if (g == 0) g = 1;
  return {p / g, q / g};
}

inline std::pair<big, big> rat_add(big p1, big q1, big p2, big q2) {
  big p = p1 * q2 + p2 * q1, q = q1 * q2;
  big g = boost::multiprecision::gcd(p < 0 ? big(-p) : p, q);
  if (g == 0) g = 1;
  return {p / g, q / g};
}

/// Span by naive fixpoint on integer entries. Vector rule: {s*b}; algebra
/// rule: the set {s*b} closed under +. Only for Z_n carriers.
inline std::set<std::vector<std::int64_t>> span(const Carrier& c, const std::vector<std::vector<std::int64_t>>& basis,
                                                 const std::vector<std::int64_t>& scalars, bool algebra) {
  const std::uint32_t n = c.modulus();
  std::set<std::vector<std::int64_t>> out;
  for (const auto& b : basis)
    for (auto s : scalars) out.insert(mul(s, b, n));
  if (!algebra) return out;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::int64_t>> cur(out.begin(), out.end());
    for (const auto& u : cur)
      for (const auto& v : cur)
        if (out.insert(add(u, v, n)).second) grew = true;
  }
  return out;
}

using frac = std::pair<big, big>;

/// Rational counterpart of span. Products and sums outside the carrier's
/// bound are not representable and are dropped.
inline std::set<frac> rational_span(std::int64_t bound, const std::vector<frac>& basis, const std::vector<frac>& scalars,
                                    bool algebra) {
  auto fits = [&](const frac& q) { return q.first >= -bound && q.first <= bound && q.second <= bound; };
  std::set<frac> out;
  for (const auto& b : basis)
    for (const auto& s : scalars) {
      auto q = rat_mul(s.first, s.second, b.first, b.second);
      if (fits(q)) out.insert(q);
    }
  if (!algebra) return out;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<frac> cur(out.begin(), out.end());
    for (const auto& u : cur)
      for (const auto& w : cur) {
        auto q = rat_add(u.first, u.second, w.first, w.second);
        if (fits(q) && out.insert(q).second) grew = true;
      }
  }
  return out;
}

inline std::optional<std::size_t> rational_min_generating_size(const setalg::ComponentSpace& v) {
  auto as_frac = [](const setalg::Rational& q) { return frac{big(q.num()), big(q.den())}; };
  std::vector<frac> members, scalars;
  for (Code x : v.members()) members.push_back(as_frac(v.carrier().rational(x)));
  for (Code s : v.scalars().members()) scalars.push_back(as_frac(v.scalars().carrier().rational(s)));
  const std::set<frac> target(members.begin(), members.end());
  const bool algebra = setalg::is_algebra_profile(v.profile());
  const std::size_t m = members.size();
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<frac> b;
      for (std::size_t i = 0; i < m; ++i)
        if (pick[i]) b.push_back(members[i]);
      if (rational_span(v.carrier().bound(), b, scalars, algebra) == target) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

/// Least cardinality of a generating subset of V, by testing every subset in
/// increasing size. nullopt when nothing generates.
inline std::optional<std::size_t> min_generating_size(const setalg::ComponentSpace& v) {
  const Carrier& c = v.carrier();
  if (c.is_rational()) return rational_min_generating_size(v);
  std::vector<std::vector<std::int64_t>> members;
  for (Code x : v.members()) members.push_back(c.entries(x));
  std::vector<std::int64_t> scalars;
  for (Code s : v.scalars().members()) scalars.push_back(std::int64_t(s));
  const bool algebra = setalg::is_algebra_profile(v.profile());
  std::set<std::vector<std::int64_t>> target(members.begin(), members.end());
  const std::size_t m = members.size();
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<std::vector<std::int64_t>> b;
      for (std::size_t i = 0; i < m; ++i)
        if (pick[i]) b.push_back(members[i]);
      if (span(c, b, scalars, algebra) == target) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

struct DualCount {
  std::size_t functionals = 0;
  std::size_t annihilating = 0;
};

/// Enumerates every map V -> S as a base-|S| counter and keeps those with
/// f(c*a) = c*f(a) for all c, a (the product taken in S's modulus).
inline DualCount dual(const setalg::ComponentSpace& v, const std::vector<Code>& a) {
  const Carrier& c = v.carrier();
  const std::uint32_t m = v.scalars().carrier().modulus();
  std::vector<Code> members(v.members().begin(), v.members().end());
  std::vector<std::int64_t> scal;
  for (Code s : v.scalars().members()) scal.push_back(std::int64_t(s));
  const std::size_t nv = members.size(), ns = scal.size();
  auto idx = [&](Code x) { return std::size_t(std::find(members.begin(), members.end(), x) - members.begin()); };
  DualCount out;
  std::vector<std::size_t> f(nv, 0);
  while (true) {
    bool ok = true;
    for (std::size_t ai = 0; ai < nv && ok; ++ai)
      for (auto s : scal) {
        auto e = mul(s, c.entries(members[ai]), c.modulus());
        std::size_t j = idx(c.encode(e));
        if (j == nv || scal[f[j]] != reduce(big(s) * big(scal[f[ai]]), m)) {
          ok = false;
          break;
        }
      }
    if (ok) {
      ++out.functionals;
      bool van = true;
      for (Code x : a) van = van && scal[f[idx(x)]] == 0;
      if (van) ++out.annihilating;
    }
    std::size_t i = 0;
    while (i < nv && ++f[i] == ns) f[i++] = 0;
    if (i == nv) break;
  }
  return out;
}

}  // namespace oracle
