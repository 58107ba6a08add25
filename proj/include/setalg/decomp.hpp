#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "setalg/algebra.hpp"
#include "setalg/maps.hpp"

namespace setalg {

struct Decomposition {
  std::string name;
  SpacePtr target;
  std::vector<SpacePtr> summands;
};

inline constexpr std::uint64_t kDefaultProductCap = 1'000'000;

/// Checks that every summand is a subspace of the target, that summands meet
/// only in 0, and that each target element is exactly one sum w1 + … + wt.
/// Products larger than `product_cap` that cannot match |target| fail without
/// enumeration. Throws no_zero_element when the target lacks 0.
AxiomReport verify_direct_sum(const Decomposition& d, std::uint64_t product_cap = kDefaultProductCap);

/// v = w1 + … + wt ↦ wk (k is 0-based). Throws index_out_of_range, or
/// not_a_direct_sum when the decomposition does not verify.
FiniteMap projection_onto(const Decomposition& d, std::size_t k);
std::vector<FiniteMap> projection_family(const Decomposition& d);

/// P∘P = P for each map, Pi∘Pj = 0 for i ≠ j, and the pointwise sum is the
/// identity. Throws domain_mismatch unless all maps are operators on one space.
AxiomReport verify_projection_family(const std::vector<FiniteMap>& projections);

/// Decomposition whose summands are the images of the given projections.
Decomposition decomposition_from_projections(const std::vector<FiniteMap>& projections);

enum class SubstructureKind { subsemigroup, subgroup, subspace };

std::string_view to_string(SubstructureKind k) noexcept;

/// Natural substructure notion of a profile: semigroup profiles use
/// subsemigroups, group profiles subgroups, set profiles subspaces.
SubstructureKind substructure_kind(ProfileId p) noexcept;

/// Smallest subset of the carrier containing `seed` and closed under the
/// operations of `kind` (plus + for subspaces of algebra profiles).
MemberSet substructure_closure(const ComponentSpace& space, const std::vector<Code>& seed, SubstructureKind kind);

inline constexpr std::size_t kSubstructureLimit = 64;
inline constexpr std::size_t kDefaultResultCap = 100'000;

/// All nonempty member subsets closed under `kind`, ordered by size and then
/// lexicographically. Needs |V| ≤ 64, or the full zmod(n) carrier where the
/// answer is the subgroups d·Z_n. Throws cap_exceeded otherwise or when more
/// than `result_cap` substructures exist.
std::vector<MemberSet> enumerate_substructures(const ComponentSpace& space, SubstructureKind kind,
                                               std::size_t result_cap = kDefaultResultCap);

enum class SimplicityLevel { none, simple, strong_simple, doubly_simple };

std::string_view to_string(SimplicityLevel l) noexcept;

struct SubstructureEvidence {
  SubstructureKind kind = SubstructureKind::subsemigroup;
  /// Distinct proper nontrivial closures of single elements; empty means none exist.
  std::vector<MemberSet> proper;
};

struct SimplicityVerdict {
  SimplicityLevel level = SimplicityLevel::none;
  bool simple = false;
  bool strong_simple = false;
  bool doubly_simple = false;
  std::vector<SubstructureEvidence> components;
  SubstructureEvidence scalars;
};

inline constexpr std::size_t kClassifyLimit = std::size_t{1} << 16;

/// A proper nontrivial substructure (neither {0} nor V) exists iff the closure
/// of some single element is one, so closures of singletons decide the level.
/// Throws cap_exceeded for components above 2^16 elements.
SubstructureEvidence proper_substructures(const ComponentSpace& space, SubstructureKind kind);
SimplicityVerdict classify_simplicity(const SpecialSpace& special);

}  // namespace setalg
