#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setalg/algebra.hpp"

namespace setalg {

/// Extensional map between two component spaces, stored as one image per
/// domain member (in the domain's canonical order).
class FiniteMap {
 public:
  /// Throws incomplete_table on a size mismatch and image_outside_codomain
  /// when an image is not a codomain member.
  FiniteMap(std::string name, SpacePtr domain, SpacePtr codomain, std::vector<Code> table);

  static FiniteMap from_function(std::string name, SpacePtr domain, SpacePtr codomain,
                                 const std::function<Code(Code)>& f);
  static FiniteMap identity(SpacePtr space);
  /// Every element to the codomain's zero, which must be a member.
  static FiniteMap zero(SpacePtr domain, SpacePtr codomain);

  const std::string& name() const noexcept { return name_; }
  const ComponentSpace& domain() const noexcept { return *domain_; }
  const ComponentSpace& codomain() const noexcept { return *codomain_; }
  const SpacePtr& domain_ptr() const noexcept { return domain_; }
  const SpacePtr& codomain_ptr() const noexcept { return codomain_; }
  const std::vector<Code>& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }

  Code image_at(std::size_t i) const { return table_[i]; }
  /// Throws domain_mismatch if v is not a domain member.
  Code image(Code v) const;
  std::optional<Code> try_image(Code v) const;
  Element apply(const Element& v) const;

  bool is_operator() const { return domain_->members() == codomain_->members(); }

  /// Extensional equality: same domain and codomain member sets, same images.
  friend bool operator==(const FiniteMap& a, const FiniteMap& b);

 private:
  std::string name_;
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<Code> table_;
};

using MapPtr = std::shared_ptr<const FiniteMap>;

/// Least domain element where two maps on one domain disagree.
std::optional<Element> first_difference(const FiniteMap& a, const FiniteMap& b);

/// set_vs and set_la check T(s·v) = s·T(v); the other profiles check
/// T(c·α + β) = c·T(α) + T(β). Arguments leaving the domain are violations.
AxiomReport verify_linear_map(const FiniteMap& map, ProfileId profile);
inline AxiomReport verify_linear_map(const FiniteMap& map) { return verify_linear_map(map, map.domain().profile()); }

/// Tuple map with component routing; index_map[i] is the codomain component of
/// part i (0-based). A non-identity routing makes it a pseudo map.
struct SpecialMap {
  std::string name;
  std::vector<FiniteMap> parts;
  std::vector<std::size_t> index_map;

  bool pseudo() const;
};

AxiomReport verify_special_map(const SpecialMap& map, const SpecialSpace& domain, const SpecialSpace& codomain);

/// U∘T. Throws domain_mismatch when some image of T is not in U's domain.
FiniteMap compose_maps(const FiniteMap& u, const FiniteMap& t);
/// T composed with itself k ≥ 1 times.
FiniteMap map_power(const FiniteMap& t, unsigned k);
/// Throws not_bijective naming a collision or a missed codomain element.
FiniteMap invert_map(const FiniteMap& t);
/// Throws domain_mismatch unless T is an operator.
bool is_idempotent(const FiniteMap& t);

/// v ↦ s·T(v); throws image_outside_codomain if that leaves the codomain.
FiniteMap scale_map(const Element& s, const FiniteMap& t);
/// v ↦ T(v) + U(v) for maps with equal domains and codomains.
FiniteMap add_maps(const FiniteMap& t, const FiniteMap& u);

/// Codomain of functionals: the scalar set seen as a space over itself.
SpacePtr scalar_space(const ComponentSpace& space);

/// Functional law f(c·α) = c·f(α); throws codomain_mismatch unless f lands in
/// the scalar space of V.
AxiomReport verify_functional(const FiniteMap& f, const ComponentSpace& space);

inline constexpr std::uint64_t kDefaultDualCap = 4096;

/// All functionals on V vanishing on A, in lexicographic table order.
/// Throws cap_exceeded when |S|^|V| > cap.
std::vector<FiniteMap> annihilator(const std::vector<Element>& a, const SpacePtr& space,
                                   std::uint64_t cap = kDefaultDualCap);

/// Materializes a named rule into a table. Rules (entry positions 1-based):
///   identity, zero, transpose, reverse, sum_entries,
///   select(i1..ik)      output entry j is input entry i_j, 0 gives a zero entry
///   permute(p1..pk)     select restricted to permutations
///   project(i1..ik)     keep the listed entries, zero the rest
///   constant_fill(k)    every output entry is input entry k
///   scale(s)            v ↦ s·v
///   translate(e1..ek)   v ↦ v + e
///   constant(e1..ek)    v ↦ e
/// Throws shape_mismatch for arities or shapes that do not fit.
FiniteMap make_rule_map(std::string name, SpacePtr domain, SpacePtr codomain, const std::string& rule,
                        const std::vector<std::int64_t>& args);

bool is_known_rule(const std::string& rule);

}  // namespace setalg
