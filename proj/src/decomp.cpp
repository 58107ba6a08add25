#include "setalg/decomp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "code_set.hpp"
#include "setalg/error.hpp"
#include "setalg/parallel.hpp"

namespace setalg {

namespace {

using internal::CodeSet;

constexpr std::size_t kClosureCap = 1'000'000;
// Above this size the singleton scan stops at the first proper closure.
constexpr std::size_t kFullEvidenceLimit = 4096;

Binding bind(const char* name, const Carrier& c, Code x) { return {name, Element(c, x)}; }

std::string nth(const char* what, std::size_t i) { return std::string(what) + " " + std::to_string(i + 1); }

/// Closure of a seed under the operations selected by a substructure kind.
class Closure {
 public:
  Closure(const ComponentSpace& V, SubstructureKind kind)
      : c_(V.carrier()),
        S_(V.scalars()),
        additive_(kind != SubstructureKind::subspace || is_algebra_profile(V.profile())),
        negate_(kind == SubstructureKind::subgroup),
        scalar_(kind == SubstructureKind::subspace),
        seen_(c_) {}

  std::vector<Code> run(const std::vector<Code>& seed) {
    if (c_.is_zmod() && additive_)
      group_closure(seed);
    else
      generic_closure(seed);
    return std::move(elems_);
  }

 private:
  bool insert(Code x) {
    if (!seen_.insert(x)) return false;
    elems_.push_back(x);
    if (elems_.size() > kClosureCap)
      fail(ErrorCode::cap_exceeded, "closure over " + c_.name() + " exceeds " + std::to_string(kClosureCap));
    return true;
  }

  // In a finite group, closing under + already yields negatives and 0.
  void add_group_generator(Code g) {
    if (seen_.contains(g)) return;
    const std::size_t base = elems_.size();
    Code x = g;
    while (insert(x)) {
      for (std::size_t i = 0; i < base; ++i) insert(*c_.try_add(x, elems_[i]));
      x = *c_.try_add(x, g);
    }
  }

  void group_closure(const std::vector<Code>& seed) {
    std::vector<Code> queue(seed.rbegin(), seed.rend());
    std::size_t scanned = 0;
    while (!queue.empty()) {
      while (!queue.empty()) {
        const Code g = queue.back();
        queue.pop_back();
        add_group_generator(g);
      }
      if (!scalar_) break;
      for (; scanned < elems_.size(); ++scanned)
        for (const Code s : S_.members()) {
          const Code p = *c_.try_act(S_.carrier(), s, elems_[scanned]);
          if (!seen_.contains(p)) queue.push_back(p);
        }
    }
  }

  void generic_closure(const std::vector<Code>& seed) {
    for (const Code x : seed) insert(x);
    for (std::size_t head = 0; head < elems_.size(); ++head) {
      const Code a = elems_[head];
      if (scalar_)
        for (const Code s : S_.members())
          if (auto p = c_.try_act(S_.carrier(), s, a)) insert(*p);
      if (negate_)
        if (auto n = c_.try_neg(a)) insert(*n);
      if (additive_)
        for (std::size_t i = 0; i <= head; ++i)
          if (auto r = c_.try_add(a, elems_[i])) insert(*r);
    }
  }

  const Carrier& c_;
  const ScalarSet& S_;
  bool additive_, negate_, scalar_;
  CodeSet seen_;
  std::vector<Code> elems_;
};

bool closes_zero(const ComponentSpace& V) { return V.contains(V.carrier().zero()); }

std::uint64_t saturating_product(const std::vector<SpacePtr>& spaces, std::uint64_t limit) {
  std::uint64_t p = 1;
  for (const auto& w : spaces) {
    if (p > limit / std::max<std::uint64_t>(w->size(), 1)) return limit + 1;
    p *= w->size();
  }
  return p;
}

/// Walks the summand product in lexicographic order, passing each tuple's sum.
/// The visitor returns false to stop. Returns false if a sum was undefined.
template <class Visit>
void walk_product(const Decomposition& d, Visit&& visit) {
  const Carrier& c = d.target->carrier();
  const std::size_t t = d.summands.size();
  std::vector<std::size_t> idx(t, 0);
  std::vector<Code> partial(t + 1, c.zero());  // partial[i] = sum of the first i chosen elements
  auto refresh = [&](std::size_t from) {
    for (std::size_t i = from; i < t; ++i) {
      auto r = c.try_add(partial[i], d.summands[i]->members().at(idx[i]));
      if (!r) fail(ErrorCode::out_of_bounds, "summand sum leaves " + c.name());
      partial[i + 1] = *r;
    }
  };
  refresh(0);
  while (true) {
    if (!visit(partial[t], idx)) return;
    std::size_t i = t;
    while (i-- > 0) {
      if (++idx[i] < d.summands[i]->size()) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
    refresh(i);
  }
}

std::string tuple_text(const Decomposition& d, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += " + ";
    s += d.summands[i]->element(idx[i]).to_string();
  }
  return s;
}

void require_sane(const Decomposition& d) {
  if (!d.target) fail(ErrorCode::invalid_structure, "decomposition " + d.name + " has no target");
  if (d.summands.empty()) fail(ErrorCode::invalid_structure, "decomposition " + d.name + " has no summands");
  for (const auto& w : d.summands)
    if (!w || w->carrier() != d.target->carrier())
      fail(ErrorCode::incompatible_carrier, "summands of " + d.name + " must share the target's carrier");
  if (!closes_zero(*d.target))
    fail(ErrorCode::no_zero_element, d.target->name() + " has no zero element; adjoin 0 first");
}

/// Member index of each summand's component, per target element.
std::vector<std::vector<Code>> representation_table(const Decomposition& d) {
  const ComponentSpace& T = *d.target;
  std::vector<std::vector<Code>> table(d.summands.size(), std::vector<Code>(T.size()));
  walk_product(d, [&](Code sum, const std::vector<std::size_t>& idx) {
    const auto j = T.members().index_of(sum);
    if (!j) fail(ErrorCode::not_a_direct_sum, d.name + " is not a direct sum");
    for (std::size_t k = 0; k < idx.size(); ++k) table[k][*j] = d.summands[k]->members().at(idx[k]);
    return true;
  });
  return table;
}

void require_direct_sum(const Decomposition& d) {
  if (!verify_direct_sum(d).ok()) fail(ErrorCode::not_a_direct_sum, d.name + " is not a direct sum");
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool closed_form_applies(const ComponentSpace& V, SubstructureKind kind) {
  return V.carrier().kind() == CarrierKind::zmod_scalar && V.members().is_full() &&
         (kind != SubstructureKind::subspace || is_algebra_profile(V.profile()));
}

// Subgroups of (Z_n, +): d·Z_n for each divisor d, largest d first (smallest set).
std::vector<MemberSet> cyclic_subgroups(const Carrier& c) {
  std::vector<MemberSet> out;
  auto ds = divisors(c.modulus());
  std::reverse(ds.begin(), ds.end());
  for (const auto d : ds) {
    std::vector<Code> codes;
    for (std::uint64_t x = 0; x < c.modulus(); x += d) codes.push_back(x);
    out.push_back(MemberSet::from_codes(c, std::move(codes)));
  }
  return out;
}

bool is_trivial(const ComponentSpace& V, const MemberSet& w) {
  return w == V.members() || (w.size() == 1 && w.at(0) == V.carrier().zero());
}

bool set_order(const MemberSet& a, const MemberSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.at(i) != b.at(i)) return a.carrier().less(a.at(i), b.at(i));
  return false;
}

}  // namespace

AxiomReport verify_direct_sum(const Decomposition& d, std::uint64_t product_cap) {
  require_sane(d);
  const ComponentSpace& T = *d.target;
  const Carrier& c = T.carrier();
  AxiomReport report;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    try {
      report.absorb(verify_subspace(*d.summands[i], T).report, nth("summand", i));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_a_subset) throw;
      report.add({"summand-subspace", {}, nth("summand", i), e.what()});
    }
  }
  for (std::size_t i = 0; i < d.summands.size(); ++i)
    for (std::size_t j = i + 1; j < d.summands.size(); ++j) {
      const MemberSet both = d.summands[i]->members().intersect(d.summands[j]->members());
      const std::string where = "summands " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
      if (both.empty()) {
        report.add({"intersection", {}, where, "the summands share no element; expected {0}"});
        continue;
      }
      for (const Code x : both)
        if (x != c.zero()) {
          report.add({"intersection", {bind("v", c, x)}, where, c.format(x) + " lies in both summands"});
          break;
        }
    }

  const std::uint64_t product = saturating_product(d.summands, std::max<std::uint64_t>(product_cap, T.size()));
  report.checked += std::min<std::uint64_t>(product, product_cap);
  if (product != T.size() && product > product_cap) {
    const bool too_many = product > T.size();
    report.add({too_many ? "unique-representation" : "representation", {}, {},
                "the summand product has " + (product > product_cap ? "more than " + std::to_string(product_cap)
                                                                    : std::to_string(product)) +
                    " tuples for " + std::to_string(T.size()) + " target elements"});
    return report;
  }
  CodeSet seen(c);
  bool failed = false;
  Code dup = 0;
  std::vector<std::size_t> second;
  walk_product(d, [&](Code sum, const std::vector<std::size_t>& idx) {
    if (!T.contains(sum)) {
      report.add({"representation", {bind("v", c, sum)}, {}, tuple_text(d, idx) + " = " + c.format(sum) +
                                                                  " is not in the target"});
      failed = true;
      return false;
    }
    if (!seen.insert(sum)) {
      dup = sum;
      second = idx;
      failed = true;
      return false;
    }
    return true;
  });
  if (!second.empty()) {
    std::string first;
    walk_product(d, [&](Code sum, const std::vector<std::size_t>& idx) {
      if (sum != dup) return true;
      first = tuple_text(d, idx);
      return false;
    });
    report.add({"unique-representation", {bind("v", c, dup)}, {},
                c.format(dup) + " = " + first + " = " + tuple_text(d, second)});
  }
  if (!failed)
    for (const Code v : T.members())
      if (!seen.contains(v)) {
        report.add({"representation", {bind("v", c, v)}, {}, c.format(v) + " is not a sum of summand elements"});
        break;
      }
  return report;
}

FiniteMap projection_onto(const Decomposition& d, std::size_t k) {
  require_sane(d);
  if (k >= d.summands.size())
    fail(ErrorCode::index_out_of_range, d.name + " has " + std::to_string(d.summands.size()) + " summands, not " +
                                            std::to_string(k + 1));
  require_direct_sum(d);
  auto table = representation_table(d);
  FiniteMap p("P" + std::to_string(k + 1), d.target, d.target, std::move(table[k]));
  if (!is_idempotent(p)) throw std::logic_error("projection of " + d.name + " is not idempotent");
  if (!(MemberSet::from_codes(d.target->carrier(), p.table()) == d.summands[k]->members()))
    throw std::logic_error("projection image differs from its summand");
  return p;
}

std::vector<FiniteMap> projection_family(const Decomposition& d) {
  require_sane(d);
  require_direct_sum(d);
  auto table = representation_table(d);
  std::vector<FiniteMap> out;
  for (std::size_t k = 0; k < table.size(); ++k)
    out.emplace_back("P" + std::to_string(k + 1), d.target, d.target, std::move(table[k]));
  return out;
}

AxiomReport verify_projection_family(const std::vector<FiniteMap>& ps) {
  if (ps.empty()) fail(ErrorCode::invalid_structure, "empty projection family");
  const ComponentSpace& V = ps.front().domain();
  const Carrier& c = V.carrier();
  for (const auto& p : ps)
    if (!p.is_operator() || !(p.domain().members() == V.members()))
      fail(ErrorCode::domain_mismatch, p.name() + " is not an operator on " + V.name());
  if (!V.contains(c.zero())) fail(ErrorCode::no_zero_element, V.name() + " has no zero element");
  AxiomReport report;
  const std::size_t n = V.size();
  auto witness = [&](std::size_t x) { return std::vector<Binding>{bind("v", c, V.members().at(x))}; };
  for (std::size_t i = 0; i < ps.size(); ++i) {
    report.checked += n;
    const auto bad = parallel_find_first(n, [&](std::size_t x) {
      const Code once = ps[i].image_at(x);
      return ps[i].image(once) != once;
    });
    if (bad) report.add({"idempotent", witness(*bad), ps[i].name(), "P(P(v)) differs from P(v)"});
  }
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      report.checked += n;
      const auto bad =
          parallel_find_first(n, [&](std::size_t x) { return ps[i].image(ps[j].image_at(x)) != c.zero(); });
      if (bad)
        report.add({"orthogonal", witness(*bad), ps[i].name() + "∘" + ps[j].name(), "the composite is not the zero map"});
    }
  report.checked += n;
  const auto bad = parallel_find_first(n, [&](std::size_t x) {
    Code sum = c.zero();
    for (const auto& p : ps) {
      const auto r = c.try_add(sum, p.image_at(x));
      if (!r) return true;
      sum = *r;
    }
    return sum != V.members().at(x);
  });
  if (bad)
    report.add({"sum-identity", witness(*bad), {},
                "the projections do not sum to v at " + c.format(V.members().at(*bad))});
  if (V.sampled()) report.mark_sampled();
  return report;
}

Decomposition decomposition_from_projections(const std::vector<FiniteMap>& ps) {
  if (ps.empty()) fail(ErrorCode::invalid_structure, "empty projection family");
  const ComponentSpace& V = ps.front().domain();
  Decomposition d{"im", ps.front().domain_ptr(), {}};
  for (const auto& p : ps)
    d.summands.push_back(make_space("im " + p.name(), MemberSet::from_codes(V.carrier(), p.table()), V.profile(),
                                    V.scalars_ptr(), V.fragment()));
  return d;
}

std::string_view to_string(SubstructureKind k) noexcept {
  switch (k) {
    case SubstructureKind::subsemigroup: return "subsemigroup";
    case SubstructureKind::subgroup: return "subgroup";
    case SubstructureKind::subspace: return "subspace";
  }
  return "";
}

SubstructureKind substructure_kind(ProfileId p) noexcept {
  if (is_group_profile(p)) return SubstructureKind::subgroup;
  if (is_semigroup_profile(p)) return SubstructureKind::subsemigroup;
  return SubstructureKind::subspace;
}

MemberSet substructure_closure(const ComponentSpace& space, const std::vector<Code>& seed, SubstructureKind kind) {
  return MemberSet::from_codes(space.carrier(), Closure(space, kind).run(seed));
}

std::vector<MemberSet> enumerate_substructures(const ComponentSpace& V, SubstructureKind kind,
                                               std::size_t result_cap) {
  if (closed_form_applies(V, kind)) return cyclic_subgroups(V.carrier());
  const std::size_t n = V.size();
  if (n > kSubstructureLimit)
    fail(ErrorCode::cap_exceeded, "substructure enumeration needs at most " + std::to_string(kSubstructureLimit) +
                                      " elements; " + V.name() + " has " + std::to_string(n));
  // Closures within V as bitmasks; a closure that leaves V is not a substructure.
  std::vector<std::optional<std::uint64_t>> single(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MemberSet cl = substructure_closure(V, {V.members().at(i)}, kind);
    if (!cl.subset_of(V.members())) continue;
    std::uint64_t m = 0;
    for (const Code x : cl) m |= std::uint64_t{1} << *V.members().index_of(x);
    single[i] = m;
  }
  auto close = [&](std::uint64_t mask) -> std::optional<std::uint64_t> {
    std::vector<Code> seed;
    for (std::uint64_t m = mask; m; m &= m - 1) seed.push_back(V.members().at(static_cast<std::size_t>(std::countr_zero(m))));
    const MemberSet cl = substructure_closure(V, seed, kind);
    if (!cl.subset_of(V.members())) return std::nullopt;
    std::uint64_t out = 0;
    for (const Code x : cl) out |= std::uint64_t{1} << *V.members().index_of(x);
    return out;
  };
  std::unordered_set<std::uint64_t> found;
  std::vector<std::uint64_t> queue;
  for (const auto& s : single)
    if (s && found.insert(*s).second) queue.push_back(*s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (found.size() > result_cap)
      fail(ErrorCode::cap_exceeded, V.name() + " has more than " + std::to_string(result_cap) + " substructures");
    const std::uint64_t m = queue[head];
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1 || !single[i]) continue;
      const std::uint64_t joined = m | *single[i];
      if (found.count(joined)) continue;
      auto cl = close(joined);
      if (cl && found.insert(*cl).second) queue.push_back(*cl);
    }
  }
  if (found.size() > result_cap)
    fail(ErrorCode::cap_exceeded, V.name() + " has more than " + std::to_string(result_cap) + " substructures");
  std::vector<MemberSet> out;
  for (const auto m : found) {
    std::vector<Code> codes;
    for (std::uint64_t x = m; x; x &= x - 1) codes.push_back(V.members().at(static_cast<std::size_t>(std::countr_zero(x))));
    out.push_back(MemberSet::from_codes(V.carrier(), std::move(codes)));
  }
  std::sort(out.begin(), out.end(), set_order);
  return out;
}

std::string_view to_string(SimplicityLevel l) noexcept {
  switch (l) {
    case SimplicityLevel::none: return "none";
    case SimplicityLevel::simple: return "simple";
    case SimplicityLevel::strong_simple: return "strong-simple";
    case SimplicityLevel::doubly_simple: return "doubly-simple";
  }
  return "none";
}

SubstructureEvidence proper_substructures(const ComponentSpace& V, SubstructureKind kind) {
  SubstructureEvidence ev{kind, {}};
  if (closed_form_applies(V, kind)) {
    for (auto& w : cyclic_subgroups(V.carrier()))
      if (!is_trivial(V, w)) ev.proper.push_back(std::move(w));
    return ev;
  }
  if (V.size() > kClassifyLimit)
    fail(ErrorCode::cap_exceeded, "simplicity classification needs at most " + std::to_string(kClassifyLimit) +
                                      " elements; " + V.name() + " has " + std::to_string(V.size()));
  for (const Code x : V.members()) {
    MemberSet cl = substructure_closure(V, {x}, kind);
    if (!cl.subset_of(V.members()) || is_trivial(V, cl)) continue;
    if (std::find(ev.proper.begin(), ev.proper.end(), cl) == ev.proper.end()) ev.proper.push_back(std::move(cl));
    if (V.size() > kFullEvidenceLimit) break;
  }
  std::sort(ev.proper.begin(), ev.proper.end(), set_order);
  return ev;
}

SimplicityVerdict classify_simplicity(const SpecialSpace& special) {
  SimplicityVerdict v;
  std::size_t without = 0;
  for (const auto& component : special.components()) {
    v.components.push_back(proper_substructures(*component, substructure_kind(component->profile())));
    if (v.components.back().proper.empty()) ++without;
  }
  const ScalarSet& S = special.scalars();
  const bool group = S.role() == ScalarRole::additive_group;
  const ComponentSpace scalars(S.name(), S.members(), group ? ProfileId::group_vs : ProfileId::semigroup_vs,
                               special.components().front()->scalars_ptr());
  v.scalars = proper_substructures(scalars, group ? SubstructureKind::subgroup : SubstructureKind::subsemigroup);
  v.simple = without > 0;
  v.strong_simple = without == special.size();
  v.doubly_simple = v.strong_simple && v.scalars.proper.empty();
  if (v.strong_simple && !v.simple) throw std::logic_error("strong-simple without simple");
  v.level = v.doubly_simple  ? SimplicityLevel::doubly_simple
            : v.strong_simple ? SimplicityLevel::strong_simple
            : v.simple        ? SimplicityLevel::simple
                              : SimplicityLevel::none;
  return v;
}

}  // namespace setalg
