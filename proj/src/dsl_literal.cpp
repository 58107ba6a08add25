#include <map>

#include "setalg/dsl.hpp"

namespace setalg::dsl {

namespace {

std::uint32_t expected_entries(const Literal& lit, const Carrier& c) {
  const std::string where = format_literal(lit) + " does not fit " + c.name();
  switch (c.kind()) {
    case CarrierKind::zmod_scalar:
    case CarrierKind::bounded_rational:
      if (lit.shape != Literal::Shape::scalar) fail(ErrorCode::shape_mismatch, where);
      return 1;
    case CarrierKind::zmod_tuple:
      if (lit.shape != Literal::Shape::tuple || lit.entries.size() != c.entry_count())
        fail(ErrorCode::shape_mismatch, where);
      return c.entry_count();
    case CarrierKind::zmod_matrix:
      if (lit.shape != Literal::Shape::matrix || lit.rows != c.rows() || lit.entries.size() != c.entry_count())
        fail(ErrorCode::shape_mismatch, where);
      return c.entry_count();
    case CarrierKind::zmod_poly:
      if (lit.shape != Literal::Shape::poly || lit.entries.size() > c.entry_count())
        fail(ErrorCode::shape_mismatch, where);
      return c.entry_count();
  }
  return 0;
}

std::int64_t residue(const Rational& q, const Carrier& c) {
  if (!q.is_integer()) fail(ErrorCode::out_of_bounds, q.to_string() + " is not an element of Z_" + std::to_string(c.modulus()));
  if (q.num() < 0 || q.num() >= static_cast<std::int64_t>(c.modulus()))
    fail(ErrorCode::out_of_bounds, q.to_string() + " is outside [0, " + std::to_string(c.modulus()) + ") for " + c.name());
  return q.num();
}

std::string entry_text(const Entry& e) {
  switch (e.kind) {
    case Entry::Kind::value: return e.value.to_string();
    case Entry::Kind::wildcard: return "*";
    case Entry::Kind::variable: return e.variable;
    case Entry::Kind::range: return std::to_string(e.lo) + ".." + std::to_string(e.hi);
    case Entry::Kind::choice: {
      std::string s = "{";
      for (std::size_t i = 0; i < e.choices.size(); ++i) s += (i ? " " : "") + e.choices[i].to_string();
      return s + "}";
    }
  }
  return "";
}

// Values a single entry may take; variables share one universe per name.
std::vector<Rational> entry_values(const Entry& e, const Carrier& c) {
  std::vector<Rational> out;
  const bool rational = c.is_rational();
  switch (e.kind) {
    case Entry::Kind::value:
      out.push_back(e.value);
      break;
    case Entry::Kind::wildcard:
    case Entry::Kind::variable:
      if (rational) fail(ErrorCode::shape_mismatch, "'" + entry_text(e) + "' would enumerate an infinite carrier");
      for (std::uint32_t x = 0; x < c.modulus(); ++x) out.emplace_back(x);
      break;
    case Entry::Kind::range:
      for (std::int64_t x = e.lo; x <= e.hi; ++x) out.emplace_back(x);
      break;
    case Entry::Kind::choice:
      out = e.choices;
      break;
  }
  for (const auto& q : out) {
    if (rational) {
      if (!c.holds(q)) fail(ErrorCode::out_of_bounds, q.to_string() + " is not an element of " + c.name());
    } else {
      residue(q, c);
    }
  }
  return out;
}

bool entry_matches(const Entry& e, const Rational& x, std::map<std::string, Rational>& bound) {
  switch (e.kind) {
    case Entry::Kind::value: return e.value == x;
    case Entry::Kind::wildcard: return true;
    case Entry::Kind::range: return x.is_integer() && x.num() >= e.lo && x.num() <= e.hi;
    case Entry::Kind::choice: return std::find(e.choices.begin(), e.choices.end(), x) != e.choices.end();
    case Entry::Kind::variable: {
      const auto [it, fresh] = bound.emplace(e.variable, x);
      return fresh || it->second == x;
    }
  }
  return false;
}

std::vector<Rational> entries_of(const Carrier& c, Code v) {
  std::vector<Rational> out;
  if (c.is_rational()) {
    out.push_back(c.rational(v));
  } else {
    for (const auto x : c.entries(v)) out.emplace_back(x);
  }
  return out;
}

bool literal_matches(const Literal& lit, const Carrier& c, Code v) {
  expected_entries(lit, c);
  const auto xs = entries_of(c, v);
  std::map<std::string, Rational> bound;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // Short polynomial literals leave the high coefficients at 0.
    const Entry pad{};
    const Entry& e = i < lit.entries.size() ? lit.entries[i] : pad;
    if (!entry_matches(e, xs[i], bound)) return false;
  }
  return true;
}

}  // namespace

std::string format_literal(const Literal& lit) {
  auto join = [&](std::size_t from, std::size_t count) {
    std::string s;
    for (std::size_t i = 0; i < count; ++i) s += (i ? "," : "") + entry_text(lit.entries[from + i]);
    return s;
  };
  switch (lit.shape) {
    case Literal::Shape::scalar: return lit.entries.empty() ? "" : entry_text(lit.entries[0]);
    case Literal::Shape::tuple: return "(" + join(0, lit.entries.size()) + ")";
    case Literal::Shape::poly: return "poly(" + join(0, lit.entries.size()) + ")";
    case Literal::Shape::matrix: {
      const std::size_t cols = lit.rows ? lit.entries.size() / lit.rows : 0;
      std::string s = "[";
      for (std::uint32_t r = 0; r < lit.rows; ++r) s += (r ? ";[" : "[") + join(r * cols, cols) + "]";
      return s + "]";
    }
  }
  return "";
}

std::string format_pattern(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::fallback: return "default";
    case Pattern::Kind::zero: return "zero";
    case Pattern::Kind::degree: return "deg=" + std::to_string(p.degree);
    case Pattern::Kind::sum: {
      std::string s = "sum(";
      if (p.positions.empty()) s += "*";
      for (std::size_t i = 0; i < p.positions.size(); ++i) s += (i ? "," : "") + std::to_string(p.positions[i]);
      return s + ")=" + std::to_string(p.target);
    }
    case Pattern::Kind::set: {
      std::string s = "{";
      for (std::size_t i = 0; i < p.literals.size(); ++i) s += (i ? " " : "") + format_literal(p.literals[i]);
      return s + "}";
    }
    case Pattern::Kind::literal: return format_literal(p.literals.front());
  }
  return "";
}

Code encode_literal(const Literal& lit, const Carrier& c) {
  if (!lit.ground()) fail(ErrorCode::shape_mismatch, format_literal(lit) + " is a pattern, not an element");
  const std::uint32_t n = expected_entries(lit, c);
  if (c.is_rational()) {
    const auto code = c.encode_rational(lit.entries[0].value);
    if (!code) fail(ErrorCode::out_of_bounds, lit.entries[0].value.to_string() + " is not an element of " + c.name());
    return *code;
  }
  std::vector<std::int64_t> xs(n, 0);
  for (std::size_t i = 0; i < lit.entries.size(); ++i) xs[i] = residue(lit.entries[i].value, c);
  return c.encode(xs);
}

std::vector<Code> expand_literal(const Literal& lit, const Carrier& c, std::uint64_t cap) {
  if (lit.ground()) return {encode_literal(lit, c)};
  const std::uint32_t n = expected_entries(lit, c);
  // Positions are grouped: each free variable contributes one dimension.
  std::vector<std::vector<Rational>> dims;
  std::vector<std::size_t> dim_of(n, 0);
  std::map<std::string, std::size_t> var_dim;
  for (std::uint32_t i = 0; i < n; ++i) {
    const Entry pad{};
    const Entry& e = i < lit.entries.size() ? lit.entries[i] : pad;
    if (e.kind == Entry::Kind::variable) {
      const auto [it, fresh] = var_dim.emplace(e.variable, dims.size());
      if (fresh) dims.push_back(entry_values(e, c));
      dim_of[i] = it->second;
    } else {
      dim_of[i] = dims.size();
      dims.push_back(entry_values(e, c));
    }
  }
  std::uint64_t count = 1;
  for (const auto& d : dims) {
    if (d.empty() || count > cap / d.size()) {
      if (d.empty()) return {};
      fail(ErrorCode::carrier_too_large, format_literal(lit) + " denotes more than " + std::to_string(cap) + " elements");
    }
    count *= d.size();
  }
  std::vector<Code> out;
  out.reserve(count);
  std::vector<std::size_t> idx(dims.size(), 0);
  std::vector<std::int64_t> xs(n);
  while (true) {
    if (c.is_rational()) {
      out.push_back(*c.encode_rational(dims[0][idx[0]]));
    } else {
      for (std::uint32_t i = 0; i < n; ++i) xs[i] = dims[dim_of[i]][idx[dim_of[i]]].num();
      out.push_back(c.encode(xs));
    }
    std::size_t k = dims.size();
    while (k-- > 0) {
      if (++idx[k] < dims[k].size()) break;
      idx[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

bool matches(const Pattern& p, const Carrier& c, Code v) {
  switch (p.kind) {
    case Pattern::Kind::fallback: return true;
    case Pattern::Kind::zero: return v == c.zero();
    case Pattern::Kind::literal:
    case Pattern::Kind::set:
      return std::any_of(p.literals.begin(), p.literals.end(),
                         [&](const Literal& lit) { return literal_matches(lit, c, v); });
    case Pattern::Kind::degree: {
      if (c.kind() != CarrierKind::zmod_poly) fail(ErrorCode::shape_mismatch, "deg= needs a polynomial carrier, not " + c.name());
      const auto xs = c.entries(v);
      std::int64_t deg = 0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] != 0) deg = static_cast<std::int64_t>(i);
      return deg == p.degree;
    }
    case Pattern::Kind::sum: {
      const auto xs = entries_of(c, v);
      for (const auto pos : p.positions)
        if (pos > xs.size())
          fail(ErrorCode::shape_mismatch, "entry " + std::to_string(pos) + " does not exist in " + c.name());
      if (c.is_rational()) return xs[0] == Rational(p.target);
      std::int64_t total = 0;
      const std::int64_t n = c.modulus();
      if (p.positions.empty())
        for (const auto& x : xs) total = (total + x.num()) % n;
      else
        for (const auto pos : p.positions) total = (total + xs[pos - 1].num()) % n;
      return total == ((p.target % n) + n) % n;
    }
  }
  return false;
}

}  // namespace setalg::dsl
