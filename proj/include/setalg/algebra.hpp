#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setalg/carrier.hpp"
#include "setalg/member_set.hpp"
#include "setalg/report.hpp"

namespace setalg {

enum class ScalarRole { plain_set, additive_semigroup, additive_group };

std::string_view to_string(ScalarRole role) noexcept;

/// Finite explicit set of scalars with its declared additive role. The role is
/// checked on construction: a semigroup must be closed under +, a group must
/// additionally contain 0 and all negatives.
class ScalarSet {
 public:
  ScalarSet(std::string name, MemberSet members, ScalarRole role = ScalarRole::plain_set);

  const std::string& name() const noexcept { return name_; }
  const Carrier& carrier() const noexcept { return members_.carrier(); }
  const MemberSet& members() const noexcept { return members_; }
  ScalarRole role() const noexcept { return role_; }
  std::size_t size() const noexcept { return members_.size(); }
  Element element(std::size_t i) const { return members_.element(i); }

  friend bool operator==(const ScalarSet& a, const ScalarSet& b) {
    return a.members_ == b.members_ && a.role_ == b.role_;
  }

 private:
  std::string name_;
  MemberSet members_;
  ScalarRole role_;
};

using ScalarSetPtr = std::shared_ptr<const ScalarSet>;

ScalarSetPtr make_scalars(std::string name, MemberSet members, ScalarRole role = ScalarRole::plain_set);

enum class ProfileId { set_vs, set_la, semigroup_vs, semigroup_la, special_semigroup_la, group_vs, group_la };

enum class Axiom {
  scalar_closure,         // s·v ∈ V
  zero_annihilation,      // 0·v = 0 ∈ V
  scalar_distributivity,  // (s1 + s2)·v = s1·v + s2·v
  additive_closure,       // u + v ∈ V
  vector_distributivity,  // s·(u + v) = s·u + s·v
  scalar_semigroup,       // S closed under +
  group_zero,             // 0 ∈ V
  group_negation,         // -v ∈ V
  scalar_group,           // S is an additive group
};

std::string_view axiom_id(Axiom a) noexcept;
std::string_view to_string(ProfileId p) noexcept;
std::optional<ProfileId> parse_profile(std::string_view name) noexcept;

/// Normative axiom list of each profile.
std::span<const Axiom> profile_axioms(ProfileId p) noexcept;
bool profile_has(ProfileId p, Axiom a) noexcept;
/// Algebra profiles generate by additive closure, vector-space profiles strictly by s·b.
bool is_algebra_profile(ProfileId p) noexcept;
bool is_group_profile(ProfileId p) noexcept;
bool is_semigroup_profile(ProfileId p) noexcept;

/// A finite set of elements over one carrier that claims an axiom profile
/// relative to a scalar set.
class ComponentSpace {
 public:
  ComponentSpace(std::string name, MemberSet members, ProfileId profile, ScalarSetPtr scalars,
                 bool fragment = false);

  const std::string& name() const noexcept { return name_; }
  const Carrier& carrier() const noexcept { return members_.carrier(); }
  const MemberSet& members() const noexcept { return members_; }
  ProfileId profile() const noexcept { return profile_; }
  const ScalarSet& scalars() const noexcept { return *scalars_; }
  const ScalarSetPtr& scalars_ptr() const noexcept { return scalars_; }
  std::size_t size() const noexcept { return members_.size(); }
  Element element(std::size_t i) const { return members_.element(i); }
  bool contains(Code c) const noexcept { return members_.contains(c); }
  /// Bounded fragment of an infinite carrier: verdicts are at most sampled.
  bool fragment() const noexcept { return fragment_; }
  bool sampled() const noexcept { return fragment_ || carrier().is_rational(); }

  /// Carrier, members, profile and scalars agree; names are ignored.
  friend bool same_structure(const ComponentSpace& a, const ComponentSpace& b);

 private:
  std::string name_;
  MemberSet members_;
  ProfileId profile_;
  ScalarSetPtr scalars_;
  bool fragment_;
};

using SpacePtr = std::shared_ptr<const ComponentSpace>;

SpacePtr make_space(std::string name, MemberSet members, ProfileId profile, ScalarSetPtr scalars,
                    bool fragment = false);

/// Tuple of component spaces over one common scalar set.
class SpecialSpace {
 public:
  SpecialSpace(std::string name, std::vector<SpacePtr> components);

  const std::string& name() const noexcept { return name_; }
  const std::vector<SpacePtr>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  const ComponentSpace& operator[](std::size_t i) const { return *components_[i]; }
  const ScalarSet& scalars() const { return components_.front()->scalars(); }

 private:
  std::string name_;
  std::vector<SpacePtr> components_;
};

/// List of special spaces over one scalar set (bispace for two parts, ...).
class NSpace {
 public:
  NSpace(std::string name, std::vector<SpecialSpace> parts);

  const std::string& name() const noexcept { return name_; }
  const std::vector<SpecialSpace>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }

 private:
  std::string name_;
  std::vector<SpecialSpace> parts_;
};

AxiomReport verify_component_space(const ComponentSpace& space);
AxiomReport verify_special_space(const SpecialSpace& special);
AxiomReport verify_n_space(const NSpace& nspace);

/// Whether a violation's witness, re-evaluated against `space`, still breaks its axiom.
bool reproduces(const ComponentSpace& space, const Violation& violation);

enum class SubspaceMode {
  same_scalars,    // W over the scalar set of V
  subset_scalars,  // W over a proper subset T of V's scalars
};

std::string_view to_string(SubspaceMode m) noexcept;

struct SubspaceReport {
  AxiomReport report;
  SubspaceMode mode = SubspaceMode::same_scalars;
};

/// Throws not_a_subset unless W ⊆ V and W's scalars ⊆ V's scalars.
SubspaceReport verify_subspace(const ComponentSpace& sub, const ComponentSpace& space);

/// Intersection of verified subspaces; nullopt when the intersection is empty.
/// A nonempty result is re-verified and a failure there throws std::logic_error.
std::optional<ComponentSpace> intersect_subspaces(std::span<const SpacePtr> subspaces);

enum class ActionClass { annulling, neutral, normalizing, magnification, shrinking, magnitude_preserving };

std::string_view to_string(ActionClass c) noexcept;

/// Only defined on bounded rationals; Z_n has no magnitude, so zmod inputs
/// throw unordered_carrier.
ActionClass classify_scalar_action(const Element& s, const Element& v);

struct AdjoinedSpace {
  ComponentSpace space;
  AxiomReport report;
};

AdjoinedSpace adjoin_zero(const ComponentSpace& space);

}  // namespace setalg
