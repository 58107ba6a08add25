#include "setalg/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

#include "setalg/error.hpp"

namespace setalg {

namespace {

const Rational kZero{0};
const Rational kOne{1};

Binding bind(const char* name, const Carrier& c, Code x) { return {name, Element(c, x)}; }

std::string show(const Rational& r) { return r.to_string(); }

}  // namespace

MembershipMap::MembershipMap(std::string name, SpacePtr domain, std::vector<Rational> values)
    : name_(std::move(name)), domain_(std::move(domain)), values_(std::move(values)) {
  if (!domain_) fail(ErrorCode::invalid_structure, "membership map " + name_ + " has no domain");
  if (values_.size() != domain_->size())
    fail(ErrorCode::incomplete_table, name_ + " has " + std::to_string(values_.size()) + " values for " +
                                          std::to_string(domain_->size()) + " elements of " + domain_->name());
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] < kZero || values_[i] > kOne)
      fail(ErrorCode::invalid_membership, name_ + "(" + domain_->element(i).to_string() + ") = " +
                                              show(values_[i]) + " is outside [0, 1]");
}

MembershipMap MembershipMap::from_function(std::string name, SpacePtr domain,
                                           const std::function<Rational(const Element&)>& f) {
  std::vector<Rational> values;
  values.reserve(domain->size());
  for (std::size_t i = 0; i < domain->size(); ++i) values.push_back(f(domain->element(i)));
  return MembershipMap(std::move(name), std::move(domain), std::move(values));
}

MembershipMap MembershipMap::constant(std::string name, SpacePtr domain, Rational value) {
  const std::size_t n = domain->size();
  return MembershipMap(std::move(name), std::move(domain), std::vector<Rational>(n, value));
}

Rational MembershipMap::value(Code v) const {
  const auto i = domain_->members().index_of(v);
  if (!i) fail(ErrorCode::domain_mismatch, domain_->carrier().format(v) + " is not in " + domain_->name());
  return values_[*i];
}

std::string_view to_string(FuzzyId id) noexcept {
  switch (id) {
    case FuzzyId::set_vs: return "fuzzy-set-vs";
    case FuzzyId::set_la: return "fuzzy-set-la";
    case FuzzyId::semigroup: return "fuzzy-semigroup";
    case FuzzyId::semigroup_la: return "fuzzy-semigroup-la";
    case FuzzyId::group: return "fuzzy-group";
    case FuzzyId::special: return "fuzzy-special";
  }
  return "";
}

std::string_view axiom_id(FuzzyAxiom a) noexcept {
  switch (a) {
    case FuzzyAxiom::scalar: return "fuzzy-scalar";
    case FuzzyAxiom::additive: return "fuzzy-additive";
    case FuzzyAxiom::negation: return "fuzzy-negation";
    case FuzzyAxiom::unit_zero: return "fuzzy-unit-zero";
  }
  return "";
}

FuzzyProfile FuzzyProfile::of(ProfileId p) {
  switch (p) {
    case ProfileId::set_vs: return {FuzzyId::set_vs};
    case ProfileId::set_la: return {FuzzyId::set_la};
    case ProfileId::semigroup_vs: return {FuzzyId::semigroup};
    case ProfileId::semigroup_la:
    case ProfileId::special_semigroup_la: return {FuzzyId::semigroup_la};
    case ProfileId::group_vs:
    case ProfileId::group_la: return {FuzzyId::group};
  }
  return {};
}

std::vector<FuzzyAxiom> fuzzy_axioms(FuzzyId id) {
  using A = FuzzyAxiom;
  switch (id) {
    case FuzzyId::set_vs:
    case FuzzyId::semigroup: return {A::scalar};
    case FuzzyId::set_la:
    case FuzzyId::semigroup_la: return {A::scalar, A::additive};
    case FuzzyId::group: return {A::scalar, A::additive, A::negation, A::unit_zero};
    case FuzzyId::special: return {};
  }
  return {};
}

AxiomReport verify_membership(const MembershipMap& eta, FuzzyProfile profile) {
  const ComponentSpace& V = eta.domain();
  const Carrier& c = V.carrier();
  const ScalarSet& S = V.scalars();
  if (profile.id == FuzzyId::special) profile = FuzzyProfile::of(V.profile());
  AxiomReport report;
  bool skipped = false;
  auto outside = [&](std::vector<Binding> w, const std::string& what) {
    if (V.fragment()) {
      skipped = true;
      return;
    }
    report.add({"domain-closure", std::move(w), {}, what + " is not in " + V.name()});
  };
  const std::size_t n = V.size();
  for (const FuzzyAxiom axiom : fuzzy_axioms(profile.id)) {
    const std::string id(axiom_id(axiom));
    switch (axiom) {
      case FuzzyAxiom::scalar: {
        bool done = false;
        for (std::size_t si = 0; si < S.size() && !done; ++si)
          for (std::size_t i = 0; i < n && !done; ++i) {
            ++report.checked;
            const Code s = S.members().at(si), a = V.members().at(i);
            const auto p = c.try_act(S.carrier(), s, a);
            const auto j = p ? V.members().index_of(*p) : std::nullopt;
            if (!j) {
              outside({Binding{"s", Element(S.carrier(), s)}, bind("v", c, a)}, "s·v");
              continue;
            }
            if (eta.value_at(*j) < eta.value_at(i)) {
              report.add({id, {Binding{"s", Element(S.carrier(), s)}, bind("v", c, a)}, {},
                          "η(s·v) = " + show(eta.value_at(*j)) + " < η(v) = " + show(eta.value_at(i))});
              done = true;
            }
          }
        break;
      }
      case FuzzyAxiom::additive: {
        bool done = false;
        for (std::size_t i = 0; i < n && !done; ++i)
          for (std::size_t k = 0; k < n && !done; ++k) {
            ++report.checked;
            const Code a = V.members().at(i), b = V.members().at(k);
            const auto r = c.try_add(a, b);
            const auto j = r ? V.members().index_of(*r) : std::nullopt;
            if (!j) {
              outside({bind("u", c, a), bind("v", c, b)}, "u + v");
              continue;
            }
            const Rational floor = std::min(eta.value_at(i), eta.value_at(k));
            if (eta.value_at(*j) < floor) {
              report.add({id, {bind("u", c, a), bind("v", c, b)}, {},
                          "η(u + v) = " + show(eta.value_at(*j)) + " < min = " + show(floor)});
              done = true;
            }
          }
        break;
      }
      case FuzzyAxiom::negation:
        for (std::size_t i = 0; i < n; ++i) {
          ++report.checked;
          const Code a = V.members().at(i);
          const auto m = c.try_neg(a);
          const auto j = m ? V.members().index_of(*m) : std::nullopt;
          if (!j) {
            outside({bind("v", c, a)}, "-v");
            continue;
          }
          if (eta.value_at(*j) != eta.value_at(i)) {
            report.add({id, {bind("v", c, a)}, {},
                        "η(-v) = " + show(eta.value_at(*j)) + " differs from η(v) = " + show(eta.value_at(i))});
            break;
          }
        }
        break;
      case FuzzyAxiom::unit_zero: {
        ++report.checked;
        const auto z = V.members().index_of(c.zero());
        if (!z)
          report.add({id, {}, {}, V.name() + " has no zero element"});
        else if (eta.value_at(*z) != kOne)
          report.add({id, {}, {}, "η(0) = " + show(eta.value_at(*z)) + ", expected 1"});
        break;
      }
    }
  }
  // The first domain-closure witness is enough.
  auto& vs = report.violations;
  bool seen = false;
  vs.erase(std::remove_if(vs.begin(), vs.end(),
                          [&](const Violation& v) {
                            if (v.axiom != "domain-closure") return false;
                            const bool drop = seen;
                            seen = true;
                            return drop;
                          }),
           vs.end());
  if (V.sampled() || skipped) report.mark_sampled();
  report.notes.push_back("profile " + std::string(to_string(profile.id)));
  return report;
}

std::string special_fuzzy_name(const SpecialSpace& special) {
  switch (special.scalars().role()) {
    case ScalarRole::plain_set: return "special fuzzy set vector space";
    case ScalarRole::additive_semigroup: return "special fuzzy semigroup set vector space";
    case ScalarRole::additive_group: return "special fuzzy group set vector space";
  }
  return "";
}

AxiomReport verify_special_membership(const std::vector<MembershipMap>& etas, const SpecialSpace& special) {
  if (etas.size() != special.size())
    fail(ErrorCode::component_count_mismatch, std::to_string(etas.size()) + " membership maps for " +
                                                  std::to_string(special.size()) + " components of " +
                                                  special.name());
  for (std::size_t i = 0; i < etas.size(); ++i)
    if (!(etas[i].domain().members() == special[i].members()))
      fail(ErrorCode::domain_mismatch, etas[i].name() + " is not defined on component " + std::to_string(i + 1));
  AxiomReport report;
  for (std::size_t i = 0; i < etas.size(); ++i)
    report.absorb(verify_membership(etas[i], FuzzyProfile::of(special[i].profile())),
                  "component " + std::to_string(i + 1));
  report.notes.clear();
  if (report.ok()) report.notes.push_back(special_fuzzy_name(special));
  return report;
}

MembershipMap restrict_membership(const MembershipMap& eta, const SpacePtr& sub) {
  const ComponentSpace& V = eta.domain();
  if (!sub->members().subset_of(V.members()))
    fail(ErrorCode::not_a_subspace, sub->name() + " is not contained in " + V.name());
  SubspaceReport sr;
  try {
    sr = verify_subspace(*sub, V);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_a_subset) throw;
    fail(ErrorCode::not_a_subspace, e.what());
  }
  if (!sr.report.ok()) fail(ErrorCode::not_a_subspace, sub->name() + " is not a subspace of " + V.name());
  std::vector<Rational> values;
  values.reserve(sub->size());
  for (const Code x : sub->members()) values.push_back(eta.value(x));
  // Keep V's profile so the restriction is checked against the same laws.
  const SpacePtr w = make_space(sub->name(), sub->members(), V.profile(), sub->scalars_ptr(), sub->fragment());
  MembershipMap out(eta.name() + "|" + sub->name(), w, std::move(values));
  const FuzzyProfile p = FuzzyProfile::of(V.profile());
  if (verify_membership(eta, p).ok() && !verify_membership(out, p).ok())
    throw std::logic_error("restriction of " + eta.name() + " lost its fuzzy profile");
  return out;
}

MembershipMap pointwise_min(const MembershipMap& a, const MembershipMap& b) {
  if (!(a.domain().members() == b.domain().members()))
    fail(ErrorCode::domain_mismatch, a.name() + " and " + b.name() + " have different domains");
  std::vector<Rational> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::min(a.value_at(i), b.value_at(i));
  return MembershipMap("min(" + a.name() + ", " + b.name() + ")", a.domain_ptr(), std::move(values));
}

}  // namespace setalg
