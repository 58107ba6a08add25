#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "setalg/algebra.hpp"

namespace setalg {

/// How an element of a span was obtained: s·b for a generator b, or the sum
/// of two elements obtained earlier.
struct Derivation {
  enum class Kind { scaled, sum } kind = Kind::scaled;
  Code element = 0;
  Code left = 0;   // scalar code for `scaled`, first summand for `sum`
  Code right = 0;  // generator for `scaled`, second summand for `sum`
};

struct SpanResult {
  MemberSet members;
  /// One entry per member in discovery order; filled only on request.
  std::vector<Derivation> derivations;
};

/// Vector-space profiles yield {s·b}; algebra profiles additionally close under +.
MemberSet span(const std::vector<Element>& basis, const ScalarSet& scalars, ProfileId profile);
SpanResult span_with_derivations(const std::vector<Element>& basis, const ScalarSet& scalars, ProfileId profile);

/// Throws not_a_subset if some element of `basis` lies outside V.
bool is_generating(const std::vector<Element>& basis, const ComponentSpace& space);

/// x = s·y for two distinct elements x, y of the candidate set.
struct Dependence {
  Element x;
  Element s;
  Element y;
};

std::optional<Dependence> find_dependence(const std::vector<Element>& basis, const ScalarSet& scalars);
inline bool is_independent(const std::vector<Element>& basis, const ScalarSet& scalars) {
  return !find_dependence(basis, scalars).has_value();
}

/// No element can be dropped without losing generation. Since spans grow with
/// their generators, testing every maximal proper subset decides all of them.
bool is_irredundant(const std::vector<Element>& basis, const ComponentSpace& space);
/// Same question answered by testing all 2^|B| - 1 proper subsets; |B| ≤ 24.
bool is_irredundant_exhaustive(const std::vector<Element>& basis, const ComponentSpace& space);

enum class Minimality { exact_minimum, irredundant, unverified };

std::string_view to_string(Minimality m) noexcept;

struct GeneratingReport {
  std::vector<Element> basis;
  std::size_t cardinality = 0;
  Minimality minimality = Minimality::unverified;
  bool independent = false;
};

inline constexpr std::size_t kDefaultExactCap = 64;

/// Exact least-cardinality basis (lexicographically least among minima) when
/// |V| ≤ cap; otherwise a greedy basis pruned to irredundancy. Exact search is
/// limited to 64 elements whatever the cap. Throws not_generable when no
/// subset of V spans exactly V.
GeneratingReport minimum_generating_set(const ComponentSpace& space, std::size_t cap = kDefaultExactCap);

std::vector<GeneratingReport> n_dimension(const SpecialSpace& special, std::size_t cap = kDefaultExactCap);

}  // namespace setalg
