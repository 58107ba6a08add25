#include "setalg/algebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "code_set.hpp"
#include "setalg/error.hpp"

namespace setalg {

namespace {

using internal::CodeSet;

// Exhaustive pair searches above this many evaluations are replaced by a
// structural argument where one exists.
constexpr std::uint64_t kPairBudget = 20'000'000;
constexpr std::array kSetVs{Axiom::scalar_closure};
constexpr std::array kSetLa{Axiom::scalar_closure, Axiom::additive_closure};
constexpr std::array kSemigroupVs{Axiom::scalar_closure, Axiom::zero_annihilation,
                                  Axiom::scalar_distributivity};
constexpr std::array kSemigroupLa{Axiom::scalar_closure, Axiom::zero_annihilation, Axiom::scalar_distributivity,
                                  Axiom::additive_closure, Axiom::vector_distributivity};
constexpr std::array kSpecialSemigroupLa{Axiom::scalar_closure, Axiom::additive_closure,
                                         Axiom::scalar_semigroup};
constexpr std::array kGroupVs{Axiom::additive_closure, Axiom::group_zero, Axiom::group_negation,
                              Axiom::scalar_closure, Axiom::zero_annihilation};
constexpr std::array kGroupLa{Axiom::additive_closure, Axiom::group_zero, Axiom::group_negation,
                              Axiom::scalar_closure, Axiom::zero_annihilation, Axiom::scalar_group};

struct ProfileName {
  ProfileId id;
  std::string_view name;
};

constexpr std::array kProfileNames{
    ProfileName{ProfileId::set_vs, "set_vs"},
    ProfileName{ProfileId::set_la, "set_la"},
    ProfileName{ProfileId::semigroup_vs, "semigroup_vs"},
    ProfileName{ProfileId::semigroup_la, "semigroup_la"},
    ProfileName{ProfileId::special_semigroup_la, "special_semigroup_la"},
    ProfileName{ProfileId::group_vs, "group_vs"},
    ProfileName{ProfileId::group_la, "group_la"},
};

// Scalar set check shared by ScalarSet validation and the scalar axioms.
struct ScalarFault {
  enum Kind { none, not_closed, no_zero, no_negative } kind = none;
  Code a = 0, b = 0;
};

ScalarFault scalar_closure_fault(const MemberSet& s) {
  const Carrier& c = s.carrier();
  for (const Code a : s)
    for (const Code b : s) {
      auto sum = c.try_add(a, b);
      if (!sum || !s.contains(*sum)) return {ScalarFault::not_closed, a, b};
    }
  return {};
}

ScalarFault scalar_group_fault(const MemberSet& s) {
  const Carrier& c = s.carrier();
  if (!s.contains(c.zero())) return {ScalarFault::no_zero};
  for (const Code a : s) {
    auto neg = c.try_neg(a);
    if (!neg || !s.contains(*neg)) return {ScalarFault::no_negative, a};
  }
  return scalar_closure_fault(s);
}

Binding bind(const char* name, const Carrier& c, Code x) { return {name, Element(c, x)}; }

std::string fmt(const Carrier& c, std::optional<Code> x) { return x ? c.format(*x) : "out of bounds"; }

// Pointwise predicates. Each is the definition of its axiom at one witness and
// is reused to re-evaluate reported witnesses.
bool closure_at(const ComponentSpace& V, Code s, Code v) {
  auto r = V.carrier().try_act(V.scalars().carrier(), s, v);
  return r && V.contains(*r);
}

bool zero_at(const ComponentSpace& V, Code v) {
  const Carrier& c = V.carrier();
  auto r = c.try_act(V.scalars().carrier(), V.scalars().carrier().zero(), v);
  return r && *r == c.zero() && V.contains(c.zero());
}

bool scalar_dist_at(const ComponentSpace& V, Code s1, Code s2, Code v) {
  const Carrier& c = V.carrier();
  const Carrier& sc = V.scalars().carrier();
  auto sum = sc.try_add(s1, s2);
  if (!sum) return false;
  auto lhs = c.try_act(sc, *sum, v);
  auto a = c.try_act(sc, s1, v);
  auto b = c.try_act(sc, s2, v);
  if (!lhs || !a || !b) return false;
  auto rhs = c.try_add(*a, *b);
  return rhs && *rhs == *lhs;
}

bool additive_at(const ComponentSpace& V, Code u, Code v) {
  auto r = V.carrier().try_add(u, v);
  return r && V.contains(*r);
}

bool vector_dist_at(const ComponentSpace& V, Code s, Code u, Code v) {
  const Carrier& c = V.carrier();
  const Carrier& sc = V.scalars().carrier();
  auto uv = c.try_add(u, v);
  if (!uv) return true;  // the sum itself is an additive-closure matter
  auto lhs = c.try_act(sc, s, *uv);
  auto a = c.try_act(sc, s, u);
  auto b = c.try_act(sc, s, v);
  if (!lhs || !a || !b) return false;
  auto rhs = c.try_add(*a, *b);
  return rhs && *rhs == *lhs;
}

bool negation_at(const ComponentSpace& V, Code v) {
  auto r = V.carrier().try_neg(v);
  return r && V.contains(*r);
}

class Verifier {
 public:
  explicit Verifier(const ComponentSpace& V) : V_(V), c_(V.carrier()), S_(V.scalars()), sc_(S_.carrier()) {}

  AxiomReport run() {
    for (const Axiom a : profile_axioms(V_.profile())) {
      switch (a) {
        case Axiom::scalar_closure: scalar_closure(); break;
        case Axiom::zero_annihilation: zero_annihilation(); break;
        case Axiom::scalar_distributivity: scalar_distributivity(); break;
        case Axiom::additive_closure: additive_closure(); break;
        case Axiom::vector_distributivity: vector_distributivity(); break;
        case Axiom::scalar_semigroup: scalar_semigroup(); break;
        case Axiom::group_zero: group_zero(); break;
        case Axiom::group_negation: group_negation(); break;
        case Axiom::scalar_group: scalar_group(); break;
      }
    }
    if (V_.sampled()) report_.mark_sampled();
    return std::move(report_);
  }

 private:
  void violate(Axiom a, std::vector<Binding> w, std::string detail) {
    report_.add({std::string(axiom_id(a)), std::move(w), {}, std::move(detail)});
  }

  bool full_zmod() const { return c_.is_zmod() && V_.members().is_full(); }

  void scalar_closure() {
    if (full_zmod()) {
      report_.notes.emplace_back("closure holds structurally on the full carrier");
      return;
    }
    for (const Code s : S_.members())
      for (const Code v : V_.members()) {
        ++report_.checked;
        if (!closure_at(V_, s, v)) {
          auto r = c_.try_act(sc_, s, v);
          violate(Axiom::scalar_closure, {bind("s", sc_, s), bind("v", c_, v)},
                  sc_.format(s) + "·" + c_.format(v) + " = " + fmt(c_, r) + " is not in V");
          return;
        }
      }
  }

  void zero_annihilation() {
    for (const Code v : V_.members()) {
      ++report_.checked;
      if (!zero_at(V_, v)) {
        auto r = c_.try_act(sc_, sc_.zero(), v);
        std::string why = (r && *r == c_.zero()) ? "0 is not in V" : "0·" + c_.format(v) + " = " + fmt(c_, r);
        violate(Axiom::zero_annihilation, {bind("v", c_, v)}, why);
        return;
      }
    }
  }

  // Over Z_n the law is entrywise, so it suffices to test each entry value.
  bool scalar_distributivity_entrywise() const {
    const std::uint64_t n = c_.modulus();
    for (const Code s1 : S_.members())
      for (const Code s2 : S_.members()) {
        auto sum = sc_.try_add(s1, s2);
        if (!sum) return false;
        const std::uint64_t r = *sum % n, a = s1 % n, b = s2 % n;
        if ((a + b) % n != r) return false;  // the law then fails at entry value 1
      }
    return true;
  }

  void scalar_distributivity() {
    if (c_.is_zmod() && scalar_distributivity_entrywise()) {
      report_.checked += S_.size() * S_.size();
      report_.notes.emplace_back("scalar distributivity checked entrywise");
      return;
    }
    for (const Code s1 : S_.members())
      for (const Code s2 : S_.members())
        for (const Code v : V_.members()) {
          ++report_.checked;
          if (!scalar_dist_at(V_, s1, s2, v)) {
            violate(Axiom::scalar_distributivity, {bind("s1", sc_, s1), bind("s2", sc_, s2), bind("v", c_, v)},
                    "(" + sc_.format(s1) + "+" + sc_.format(s2) + ")·" + c_.format(v) +
                        " differs from the sum of the products");
            return;
          }
        }
  }

  void report_additive(Code u, Code v) {
    auto r = c_.try_add(u, v);
    violate(Axiom::additive_closure, {bind("u", c_, u), bind("v", c_, v)},
            c_.format(u) + "+" + c_.format(v) + " = " + fmt(c_, r) + " is not in V");
  }

  bool additive_exhaustive() {
    for (const Code u : V_.members())
      for (const Code v : V_.members()) {
        ++report_.checked;
        if (!additive_at(V_, u, v)) {
          report_additive(u, v);
          return false;
        }
      }
    return true;
  }

  // Builds the subgroup generated by V one coset at a time, checking every new
  // element against V. Returns a witness pair or nullopt when V is closed.
  std::optional<std::pair<Code, Code>> additive_group_walk() {
    CodeSet seen(c_);
    std::vector<Code> group{c_.zero()};
    seen.insert(c_.zero());
    for (const Code g : V_.members()) {
      if (seen.contains(g)) continue;
      const std::size_t base = group.size();
      Code x = g;
      Code prev = g;
      bool first = true;
      while (true) {
        if (!first) {
          auto nx = c_.try_add(prev, g);
          ++report_.checked;
          if (!V_.contains(*nx)) return std::pair{prev, g};
          x = *nx;
        }
        first = false;
        if (seen.contains(x)) break;
        for (std::size_t i = 0; i < base; ++i) {
          auto y = *c_.try_add(x, group[i]);
          ++report_.checked;
          if (!V_.contains(y)) return std::pair{x, group[i]};
          seen.insert(y);
          group.push_back(y);
        }
        prev = x;
      }
    }
    return std::nullopt;
  }

  void additive_closure() {
    if (full_zmod()) {
      report_.notes.emplace_back("additive closure holds structurally on the full carrier");
      return;
    }
    const std::uint64_t n = V_.size();
    if (c_.is_rational() || n * n <= kPairBudget) {
      additive_exhaustive();
      return;
    }
    auto w = additive_group_walk();
    if (!w) {
      report_.notes.emplace_back("additive closure proven by subgroup generation");
      return;
    }
    auto [u, v] = *w;
    if (c_.less(v, u)) std::swap(u, v);
    report_additive(u, v);
    report_.notes.emplace_back("witness found by subgroup generation; not guaranteed least");
  }

  void vector_distributivity() {
    if (c_.is_zmod()) {
      report_.notes.emplace_back("vector distributivity holds entrywise over Z_n");
      return;
    }
    for (const Code s : S_.members())
      for (const Code u : V_.members())
        for (const Code v : V_.members()) {
          ++report_.checked;
          if (!vector_dist_at(V_, s, u, v)) {
            violate(Axiom::vector_distributivity, {bind("s", sc_, s), bind("u", c_, u), bind("v", c_, v)},
                    sc_.format(s) + "·(" + c_.format(u) + "+" + c_.format(v) + ") is not s·u+s·v within bounds");
            return;
          }
        }
  }

  void scalar_fault(Axiom a, const ScalarFault& f) {
    switch (f.kind) {
      case ScalarFault::none:
        return;
      case ScalarFault::not_closed:
        violate(a, {bind("s1", sc_, f.a), bind("s2", sc_, f.b)},
                sc_.format(f.a) + "+" + sc_.format(f.b) + " = " + fmt(sc_, sc_.try_add(f.a, f.b)) +
                    " is not in S");
        return;
      case ScalarFault::no_zero:
        violate(a, {}, "0 is not in S");
        return;
      case ScalarFault::no_negative:
        violate(a, {bind("s", sc_, f.a)}, "-" + sc_.format(f.a) + " is not in S");
        return;
    }
  }

  void scalar_semigroup() {
    report_.checked += S_.size() * S_.size();
    scalar_fault(Axiom::scalar_semigroup, scalar_closure_fault(S_.members()));
  }

  void scalar_group() {
    report_.checked += S_.size() * S_.size();
    scalar_fault(Axiom::scalar_group, scalar_group_fault(S_.members()));
  }

  void group_zero() {
    ++report_.checked;
    if (!V_.contains(c_.zero())) violate(Axiom::group_zero, {}, "0 is not in V");
  }

  void group_negation() {
    if (full_zmod()) return;
    for (const Code v : V_.members()) {
      ++report_.checked;
      if (!negation_at(V_, v)) {
        violate(Axiom::group_negation, {bind("v", c_, v)},
                "-" + c_.format(v) + " = " + fmt(c_, c_.try_neg(v)) + " is not in V");
        return;
      }
    }
  }

  const ComponentSpace& V_;
  const Carrier& c_;
  const ScalarSet& S_;
  const Carrier& sc_;
  AxiomReport report_;
};

bool same_scalars(const ScalarSet& a, const ScalarSet& b) { return a.members() == b.members(); }

}  // namespace

std::string_view to_string(ScalarRole role) noexcept {
  switch (role) {
    case ScalarRole::plain_set: return "set";
    case ScalarRole::additive_semigroup: return "semigroup";
    case ScalarRole::additive_group: return "group";
  }
  return "set";
}

ScalarSet::ScalarSet(std::string name, MemberSet members, ScalarRole role)
    : name_(std::move(name)), members_(std::move(members)), role_(role) {
  if (!members_.carrier().is_scalar())
    fail(ErrorCode::invalid_structure, "scalars must come from zmod(n) or a rational carrier, not " +
                                           members_.carrier().name());
  if (members_.empty()) fail(ErrorCode::invalid_structure, "scalar set " + name_ + " is empty");
  const Carrier& c = members_.carrier();
  ScalarFault f;
  if (role_ == ScalarRole::additive_semigroup) f = scalar_closure_fault(members_);
  if (role_ == ScalarRole::additive_group) f = scalar_group_fault(members_);
  switch (f.kind) {
    case ScalarFault::none:
      break;
    case ScalarFault::not_closed:
      fail(ErrorCode::invalid_structure, "scalar set " + name_ + " is not closed under +: " + c.format(f.a) +
                                             "+" + c.format(f.b) + " = " + fmt(c, c.try_add(f.a, f.b)));
    case ScalarFault::no_zero:
      fail(ErrorCode::invalid_structure, "scalar set " + name_ + " lacks 0");
    case ScalarFault::no_negative:
      fail(ErrorCode::invalid_structure, "scalar set " + name_ + " lacks -" + c.format(f.a));
  }
}

ScalarSetPtr make_scalars(std::string name, MemberSet members, ScalarRole role) {
  return std::make_shared<const ScalarSet>(std::move(name), std::move(members), role);
}

std::string_view axiom_id(Axiom a) noexcept {
  switch (a) {
    case Axiom::scalar_closure: return "closure";
    case Axiom::zero_annihilation: return "zero";
    case Axiom::scalar_distributivity: return "scalar-distributivity";
    case Axiom::additive_closure: return "additive-closure";
    case Axiom::vector_distributivity: return "vector-distributivity";
    case Axiom::scalar_semigroup: return "scalar-semigroup";
    case Axiom::group_zero: return "group-zero";
    case Axiom::group_negation: return "group-negation";
    case Axiom::scalar_group: return "scalar-group";
  }
  return "";
}

std::string_view to_string(ProfileId p) noexcept {
  for (const auto& e : kProfileNames)
    if (e.id == p) return e.name;
  return "";
}

std::optional<ProfileId> parse_profile(std::string_view name) noexcept {
  for (const auto& e : kProfileNames)
    if (e.name == name) return e.id;
  return std::nullopt;
}

std::span<const Axiom> profile_axioms(ProfileId p) noexcept {
  switch (p) {
    case ProfileId::set_vs: return kSetVs;
    case ProfileId::set_la: return kSetLa;
    case ProfileId::semigroup_vs: return kSemigroupVs;
    case ProfileId::semigroup_la: return kSemigroupLa;
    case ProfileId::special_semigroup_la: return kSpecialSemigroupLa;
    case ProfileId::group_vs: return kGroupVs;
    case ProfileId::group_la: return kGroupLa;
  }
  return {};
}

bool profile_has(ProfileId p, Axiom a) noexcept {
  const auto axioms = profile_axioms(p);
  return std::find(axioms.begin(), axioms.end(), a) != axioms.end();
}

bool is_algebra_profile(ProfileId p) noexcept { return profile_has(p, Axiom::additive_closure); }

bool is_group_profile(ProfileId p) noexcept { return p == ProfileId::group_vs || p == ProfileId::group_la; }

bool is_semigroup_profile(ProfileId p) noexcept {
  return p == ProfileId::semigroup_vs || p == ProfileId::semigroup_la || p == ProfileId::special_semigroup_la;
}

ComponentSpace::ComponentSpace(std::string name, MemberSet members, ProfileId profile, ScalarSetPtr scalars,
                               bool fragment)
    : name_(std::move(name)),
      members_(std::move(members)),
      profile_(profile),
      scalars_(std::move(scalars)),
      fragment_(fragment) {
  if (!scalars_) fail(ErrorCode::invalid_structure, "space " + name_ + " has no scalar set");
  if (members_.empty()) fail(ErrorCode::invalid_structure, "space " + name_ + " is empty");
  if (!members_.carrier().accepts_scalars(scalars_->carrier()))
    fail(ErrorCode::incompatible_carrier,
         "scalars from " + scalars_->carrier().name() + " do not act on " + members_.carrier().name());
}

bool same_structure(const ComponentSpace& a, const ComponentSpace& b) {
  return a.members_ == b.members_ && a.profile_ == b.profile_ && *a.scalars_ == *b.scalars_;
}

SpacePtr make_space(std::string name, MemberSet members, ProfileId profile, ScalarSetPtr scalars,
                    bool fragment) {
  return std::make_shared<const ComponentSpace>(std::move(name), std::move(members), profile, std::move(scalars),
                                                fragment);
}

SpecialSpace::SpecialSpace(std::string name, std::vector<SpacePtr> components)
    : name_(std::move(name)), components_(std::move(components)) {
  if (components_.empty()) fail(ErrorCode::invalid_structure, "special space " + name_ + " has no components");
  for (const auto& c : components_) {
    if (!c) fail(ErrorCode::invalid_structure, "special space " + name_ + " has a missing component");
    if (!same_scalars(c->scalars(), components_.front()->scalars()))
      fail(ErrorCode::incompatible_carrier, "components of " + name_ + " use different scalar sets");
  }
}

NSpace::NSpace(std::string name, std::vector<SpecialSpace> parts) : name_(std::move(name)), parts_(std::move(parts)) {
  if (parts_.empty()) fail(ErrorCode::invalid_structure, "n-space " + name_ + " has no parts");
  for (const auto& p : parts_)
    if (!same_scalars(p.scalars(), parts_.front().scalars()))
      fail(ErrorCode::incompatible_carrier, "parts of " + name_ + " use different scalar sets");
}

AxiomReport verify_component_space(const ComponentSpace& space) { return Verifier(space).run(); }

AxiomReport verify_special_space(const SpecialSpace& special) {
  AxiomReport report;
  for (std::size_t i = 0; i < special.size(); ++i)
    report.absorb(verify_component_space(special[i]), "component " + std::to_string(i + 1));
  for (std::size_t i = 0; i < special.size(); ++i)
    for (std::size_t j = i + 1; j < special.size(); ++j) {
      const MemberSet& a = special[i].members();
      const MemberSet& b = special[j].members();
      if (a.carrier() != b.carrier()) continue;
      if (a.subset_of(b) || b.subset_of(a))
        report.warnings.push_back("components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " are nested");
    }
  return report;
}

AxiomReport verify_n_space(const NSpace& nspace) {
  AxiomReport report;
  const auto& parts = nspace.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    report.absorb(verify_special_space(parts[i]), "part " + std::to_string(i + 1));
  auto covers = [](const SpecialSpace& x, const SpecialSpace& y) {
    for (const auto& a : x.components()) {
      bool found = false;
      for (const auto& b : y.components()) found = found || a->members() == b->members();
      if (!found) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (covers(parts[i], parts[j]) && covers(parts[j], parts[i]))
        report.add({"distinct-parts", {}, "parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1),
                    "the two parts have the same components"});
  return report;
}

bool reproduces(const ComponentSpace& V, const Violation& w) {
  auto code = [&](const char* n) -> std::optional<Code> {
    const Element* e = w.find(n);
    if (!e) return std::nullopt;
    return e->code();
  };
  const auto s = code("s"), s1 = code("s1"), s2 = code("s2"), u = code("u"), v = code("v");
  const ScalarSet& S = V.scalars();
  const std::string& a = w.axiom;
  if (a == axiom_id(Axiom::scalar_closure)) return s && v && !closure_at(V, *s, *v);
  if (a == axiom_id(Axiom::zero_annihilation)) return v && !zero_at(V, *v);
  if (a == axiom_id(Axiom::scalar_distributivity)) return s1 && s2 && v && !scalar_dist_at(V, *s1, *s2, *v);
  if (a == axiom_id(Axiom::additive_closure)) return u && v && !additive_at(V, *u, *v);
  if (a == axiom_id(Axiom::vector_distributivity)) return s && u && v && !vector_dist_at(V, *s, *u, *v);
  if (a == axiom_id(Axiom::group_zero)) return !V.contains(V.carrier().zero());
  if (a == axiom_id(Axiom::group_negation)) return v && !negation_at(V, *v);
  if (a == axiom_id(Axiom::scalar_semigroup) || a == axiom_id(Axiom::scalar_group)) {
    const Carrier& sc = S.carrier();
    if (s1 && s2) {
      auto sum = sc.try_add(*s1, *s2);
      return !sum || !S.members().contains(*sum);
    }
    if (s) {
      auto neg = sc.try_neg(*s);
      return !neg || !S.members().contains(*neg);
    }
    return !S.members().contains(sc.zero());
  }
  return false;
}

std::string_view to_string(SubspaceMode m) noexcept {
  return m == SubspaceMode::same_scalars ? "subspace" : "subset-subspace";
}

SubspaceReport verify_subspace(const ComponentSpace& sub, const ComponentSpace& space) {
  if (sub.carrier() != space.carrier())
    fail(ErrorCode::incompatible_carrier, sub.name() + " and " + space.name() + " live on different carriers");
  if (!sub.members().subset_of(space.members()))
    fail(ErrorCode::not_a_subset, sub.name() + " is not a subset of " + space.name());
  if (!sub.scalars().members().subset_of(space.scalars().members()))
    fail(ErrorCode::not_a_subset, "scalars of " + sub.name() + " are not a subset of the scalars of " + space.name());
  const ComponentSpace as_profile(sub.name(), sub.members(), space.profile(), sub.scalars_ptr(),
                                  sub.fragment() || space.fragment());
  SubspaceReport out;
  out.mode = same_scalars(sub.scalars(), space.scalars()) ? SubspaceMode::same_scalars
                                                           : SubspaceMode::subset_scalars;
  out.report = verify_component_space(as_profile);
  return out;
}

std::optional<ComponentSpace> intersect_subspaces(std::span<const SpacePtr> subspaces) {
  if (subspaces.empty()) fail(ErrorCode::invalid_structure, "intersection of an empty family");
  const ComponentSpace& first = *subspaces.front();
  MemberSet members = first.members();
  MemberSet scalars = first.scalars().members();
  ScalarRole role = first.scalars().role();
  bool shared_scalars = true;
  bool fragment = first.fragment();
  std::string name = first.name();
  for (std::size_t i = 1; i < subspaces.size(); ++i) {
    const ComponentSpace& w = *subspaces[i];
    if (w.carrier() != first.carrier())
      fail(ErrorCode::incompatible_carrier, "cannot intersect " + first.name() + " and " + w.name());
    if (w.profile() != first.profile())
      fail(ErrorCode::invalid_structure, "cannot intersect spaces of different profiles");
    members = members.intersect(w.members());
    shared_scalars = shared_scalars && w.scalars_ptr() == first.scalars_ptr();
    scalars = scalars.intersect(w.scalars().members());
    role = std::min(role, w.scalars().role());
    fragment = fragment || w.fragment();
    name += "∩" + w.name();
  }
  if (members.empty() || scalars.empty()) return std::nullopt;
  ScalarSetPtr common = shared_scalars ? first.scalars_ptr() : make_scalars(name + ".scalars", scalars, role);
  ComponentSpace result(name, members, first.profile(), common, fragment);
  if (!verify_component_space(result).ok())
    throw std::logic_error("intersection of subspaces " + name + " is not a subspace");
  return result;
}

std::string_view to_string(ActionClass c) noexcept {
  switch (c) {
    case ActionClass::annulling: return "annulling";
    case ActionClass::neutral: return "neutral";
    case ActionClass::normalizing: return "normalizing";
    case ActionClass::magnification: return "magnification";
    case ActionClass::shrinking: return "shrinking";
    case ActionClass::magnitude_preserving: return "magnitude-preserving";
  }
  return "";
}

ActionClass classify_scalar_action(const Element& s, const Element& v) {
  if (!s.carrier().is_rational() || !v.carrier().is_rational())
    fail(ErrorCode::unordered_carrier, "scalar action classes need an ordered carrier; Z_n has no magnitude");
  const Element p = element_mul(s, v);
  const Rational pv = p.value(), vv = v.value();
  if (pv.is_zero()) return ActionClass::annulling;
  if (pv == vv) return ActionClass::neutral;
  if (pv == Rational(1)) return ActionClass::normalizing;
  if (pv.abs() > vv.abs()) return ActionClass::magnification;
  if (pv.abs() < vv.abs()) return ActionClass::shrinking;
  return ActionClass::magnitude_preserving;
}

AdjoinedSpace adjoin_zero(const ComponentSpace& space) {
  ComponentSpace extended(space.name(), space.members().with(space.carrier().zero()), space.profile(),
                          space.scalars_ptr(), space.fragment());
  AxiomReport report = verify_component_space(extended);
  return {std::move(extended), std::move(report)};
}

}  // namespace setalg
