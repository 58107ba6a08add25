#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "setalg/algebra.hpp"
#include "setalg/rational.hpp"

namespace setalg {

/// Total map from a space's members to exact rationals in [0, 1].
class MembershipMap {
 public:
  /// Throws incomplete_table on a size mismatch, invalid_membership for values outside [0, 1].
  MembershipMap(std::string name, SpacePtr domain, std::vector<Rational> values);
  static MembershipMap from_function(std::string name, SpacePtr domain,
                                     const std::function<Rational(const Element&)>& f);
  static MembershipMap constant(std::string name, SpacePtr domain, Rational value);

  const std::string& name() const noexcept { return name_; }
  const ComponentSpace& domain() const noexcept { return *domain_; }
  const SpacePtr& domain_ptr() const noexcept { return domain_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  Rational value_at(std::size_t i) const { return values_[i]; }
  /// Throws domain_mismatch for non-members.
  Rational value(Code v) const;

 private:
  std::string name_;
  SpacePtr domain_;
  std::vector<Rational> values_;
};

enum class FuzzyId { set_vs, set_la, semigroup, semigroup_la, group, special };

enum class FuzzyAxiom {
  scalar,    // η(s·a) ≥ η(a)
  additive,  // η(a + b) ≥ min(η(a), η(b))
  negation,  // η(-a) = η(a)
  unit_zero  // η(0) = 1
};

std::string_view to_string(FuzzyId id) noexcept;
std::string_view axiom_id(FuzzyAxiom a) noexcept;

struct FuzzyProfile {
  FuzzyId id = FuzzyId::set_vs;
  /// Component count, only meaningful for the special id.
  std::size_t n = 0;

  static FuzzyProfile special(std::size_t n) { return {FuzzyId::special, n}; }
  /// Natural overlay of a crisp profile.
  static FuzzyProfile of(ProfileId p);
};

/// Fixed axiom list per id; the special id has none of its own (each
/// component uses the overlay of its crisp profile).
std::vector<FuzzyAxiom> fuzzy_axioms(FuzzyId id);

/// Exhaustive exact check. When s·a or a + b leaves the domain the law is
/// undefined there: on a fragment that pair is skipped, otherwise it is a
/// domain-closure violation. The special id checks the domain's natural overlay.
AxiomReport verify_membership(const MembershipMap& eta, FuzzyProfile profile);

/// Structure name a passing special overlay denotes, by the scalar role.
std::string special_fuzzy_name(const SpecialSpace& special);

/// Componentwise check with contexts "component i"; component domains must
/// have the same members as the special space's components.
AxiomReport verify_special_membership(const std::vector<MembershipMap>& etas, const SpecialSpace& special);

/// Table restricted to W. Throws not_a_subspace unless W ⊆ domain and W passes
/// its profile.
MembershipMap restrict_membership(const MembershipMap& eta, const SpacePtr& sub);

/// Pointwise min; throws domain_mismatch for different domains.
MembershipMap pointwise_min(const MembershipMap& a, const MembershipMap& b);

}  // namespace setalg
