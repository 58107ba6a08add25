#include "setalg/maps.hpp"

#include <algorithm>
#include <stdexcept>

#include "setalg/error.hpp"

namespace setalg {

namespace {

// Exhaustive (c, α, β) scans above this size rely on the additive shortcut.
constexpr std::uint64_t kTripleBudget = 50'000'000;

Binding bind(const char* name, const Carrier& c, Code x) { return {name, Element(c, x)}; }

std::string show(const Carrier& c, std::optional<Code> x) { return x ? c.format(*x) : "out of bounds"; }

class MapVerifier {
 public:
  MapVerifier(const FiniteMap& t, ProfileId profile)
      : T_(t), V_(t.domain()), W_(t.codomain()), S_(V_.scalars()), sc_(S_.carrier()), profile_(profile) {
    if (!W_.carrier().accepts_scalars(sc_))
      fail(ErrorCode::incompatible_carrier,
           "scalars of " + V_.name() + " do not act on the codomain " + W_.carrier().name());
  }

  AxiomReport run() {
    if (profile_ == ProfileId::set_vs || profile_ == ProfileId::set_la)
      scalar_law();
    else
      linearity_law();
    if (V_.sampled() || W_.sampled()) report_.mark_sampled();
    return std::move(report_);
  }

 private:
  const Carrier& dc() const { return V_.carrier(); }
  const Carrier& cc() const { return W_.carrier(); }

  void scalar_law() {
    bool closure_seen = false, law_seen = false;
    for (const Code s : S_.members())
      for (std::size_t i = 0; i < V_.size(); ++i) {
        const Code v = V_.members().at(i);
        ++report_.checked;
        auto sv = dc().try_act(sc_, s, v);
        if (!sv || !V_.contains(*sv)) {
          if (!closure_seen)
            report_.add({"map-domain-closure", {bind("s", sc_, s), bind("v", dc(), v)}, {},
                         sc_.format(s) + "·" + dc().format(v) + " = " + show(dc(), sv) + " is not in the domain"});
          closure_seen = true;
        } else {
          const Code lhs = T_.image(*sv);
          auto rhs = cc().try_act(sc_, s, T_.image_at(i));
          if ((!rhs || *rhs != lhs) && !law_seen) {
            report_.add({"map-scalar", {bind("s", sc_, s), bind("v", dc(), v)}, {},
                         "T(" + sc_.format(s) + "·" + dc().format(v) + ") = " + cc().format(lhs) + " but " +
                             sc_.format(s) + "·T(" + dc().format(v) + ") = " + show(cc(), rhs)});
            law_seen = true;
          }
        }
        if (closure_seen && law_seen) return;
      }
  }

  // Outcome of the law at one (c, α, β): 0 holds, 1 argument leaves the domain, 2 law fails.
  int law_at(Code c, std::size_t ai, Code beta) const {
    const Code alpha = V_.members().at(ai);
    auto ca = dc().try_act(sc_, c, alpha);
    if (!ca) return 1;
    auto arg = dc().try_add(*ca, beta);
    if (!arg || !V_.contains(*arg)) return 1;
    auto cta = cc().try_act(sc_, c, T_.image_at(ai));
    if (!cta) return 2;
    auto rhs = cc().try_add(*cta, T_.image(beta));
    return rhs && *rhs == T_.image(*arg) ? 0 : 2;
  }

  void add_law_violation(int kind, Code c, Code alpha, Code beta) {
    std::vector<Binding> w{bind("c", sc_, c), bind("alpha", dc(), alpha), bind("beta", dc(), beta)};
    if (kind == 1)
      report_.add({"map-domain-closure", std::move(w), {},
                   sc_.format(c) + "·" + dc().format(alpha) + "+" + dc().format(beta) + " is not in the domain"});
    else
      report_.add({"map-linearity", std::move(w), {},
                   "T(" + sc_.format(c) + "·" + dc().format(alpha) + "+" + dc().format(beta) +
                       ") differs from c·T(alpha)+T(beta)"});
  }

  bool exhaustive_linearity() {
    bool seen[3] = {false, false, false};
    for (const Code c : S_.members())
      for (std::size_t ai = 0; ai < V_.size(); ++ai)
        for (const Code beta : V_.members()) {
          ++report_.checked;
          const int k = law_at(c, ai, beta);
          if (k == 0 || seen[k]) continue;
          seen[k] = true;
          add_law_violation(k, c, V_.members().at(ai), beta);
          if (seen[1] && seen[2]) return false;
        }
    return !seen[1] && !seen[2];
  }

  std::optional<Code> unit_scalar() const {
    for (const Code s : S_.members())
      if (s % dc().modulus() == 1 && s % cc().modulus() == 1) return s;
    return std::nullopt;
  }

  // On a full Z_n carrier with a scalar acting as 1, the law splits into
  // additivity (checked along the unit vectors, which generate the group) and
  // T(c·α) = c·T(α).
  bool shortcut_applies() const {
    return dc().is_zmod() && cc().is_zmod() && V_.members().is_full() && unit_scalar().has_value();
  }

  void linearity_law() {
    const std::uint64_t n = V_.size();
    const std::uint64_t triples = S_.size() * n * n;
    if (!shortcut_applies() || triples <= kTripleBudget) {
      exhaustive_linearity();
      return;
    }
    const Code unit = *unit_scalar();
    std::vector<Code> units;
    for (std::uint64_t place = 1, i = 0; i < dc().entry_count(); ++i, place *= dc().modulus()) units.push_back(place);
    for (std::size_t ai = 0; ai < n; ++ai)
      for (const Code e : units) {
        ++report_.checked;
        const Code alpha = V_.members().at(ai);
        if (law_at(unit, ai, e) != 0) {
          add_law_violation(2, unit, alpha, e);
          report_.notes.emplace_back("witness found along unit vectors; not guaranteed least");
          return;
        }
      }
    const Code zero = dc().zero();
    for (const Code c : S_.members())
      for (std::size_t ai = 0; ai < n; ++ai) {
        ++report_.checked;
        if (law_at(c, ai, zero) != 0) {
          add_law_violation(2, c, V_.members().at(ai), zero);
          return;
        }
      }
    report_.notes.emplace_back("linearity proven from additivity on unit vectors");
  }

  const FiniteMap& T_;
  const ComponentSpace& V_;
  const ComponentSpace& W_;
  const ScalarSet& S_;
  const Carrier& sc_;
  ProfileId profile_;
  AxiomReport report_;
};

void require_same_spaces(const FiniteMap& a, const FiniteMap& b) {
  if (!(a.domain().members() == b.domain().members()))
    fail(ErrorCode::domain_mismatch, a.name() + " and " + b.name() + " have different domains");
  if (!(a.codomain().members() == b.codomain().members()))
    fail(ErrorCode::codomain_mismatch, a.name() + " and " + b.name() + " have different codomains");
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

FiniteMap::FiniteMap(std::string name, SpacePtr domain, SpacePtr codomain, std::vector<Code> table)
    : name_(std::move(name)), domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (!domain_ || !codomain_) fail(ErrorCode::invalid_structure, "map " + name_ + " lacks a domain or codomain");
  if (table_.size() != domain_->size())
    fail(ErrorCode::incomplete_table, "map " + name_ + " has " + std::to_string(table_.size()) +
                                          " images for " + std::to_string(domain_->size()) + " domain elements");
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (!codomain_->contains(table_[i]))
      fail(ErrorCode::image_outside_codomain, "map " + name_ + " sends " + domain_->carrier().format(domain_->members().at(i)) +
                                                  " to " + codomain_->carrier().format(table_[i]) +
                                                  ", outside " + codomain_->name());
}

FiniteMap FiniteMap::from_function(std::string name, SpacePtr domain, SpacePtr codomain,
                                   const std::function<Code(Code)>& f) {
  std::vector<Code> table;
  table.reserve(domain->size());
  for (const Code v : domain->members()) table.push_back(f(v));
  return {std::move(name), std::move(domain), std::move(codomain), std::move(table)};
}

FiniteMap FiniteMap::identity(SpacePtr space) {
  return from_function("I", space, space, [](Code v) { return v; });
}

FiniteMap FiniteMap::zero(SpacePtr domain, SpacePtr codomain) {
  const Code z = codomain->carrier().zero();
  return from_function("0", std::move(domain), std::move(codomain), [z](Code) { return z; });
}

std::optional<Code> FiniteMap::try_image(Code v) const {
  auto i = domain_->members().index_of(v);
  if (!i) return std::nullopt;
  return table_[*i];
}

Code FiniteMap::image(Code v) const {
  auto r = try_image(v);
  if (!r)
    fail(ErrorCode::domain_mismatch, domain_->carrier().format(v) + " is not in the domain of " + name_);
  return *r;
}

Element FiniteMap::apply(const Element& v) const {
  if (v.carrier() != domain_->carrier())
    fail(ErrorCode::domain_mismatch, v.to_string() + " is not in the domain of " + name_);
  return {codomain_->carrier(), image(v.code())};
}

bool operator==(const FiniteMap& a, const FiniteMap& b) {
  return a.domain_->members() == b.domain_->members() && a.codomain_->members() == b.codomain_->members() &&
         a.table_ == b.table_;
}

std::optional<Element> first_difference(const FiniteMap& a, const FiniteMap& b) {
  if (!(a.domain().members() == b.domain().members()))
    fail(ErrorCode::domain_mismatch, a.name() + " and " + b.name() + " have different domains");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.image_at(i) != b.image_at(i)) return a.domain().element(i);
  return std::nullopt;
}

AxiomReport verify_linear_map(const FiniteMap& map, ProfileId profile) { return MapVerifier(map, profile).run(); }

bool SpecialMap::pseudo() const {
  for (std::size_t i = 0; i < index_map.size(); ++i)
    if (index_map[i] != i) return true;
  return false;
}

AxiomReport verify_special_map(const SpecialMap& map, const SpecialSpace& domain, const SpecialSpace& codomain) {
  if (map.parts.size() != domain.size())
    fail(ErrorCode::component_count_mismatch, map.name + " has " + std::to_string(map.parts.size()) +
                                                  " parts for " + std::to_string(domain.size()) + " components");
  if (map.index_map.size() != map.parts.size())
    fail(ErrorCode::component_count_mismatch, map.name + " routes " + std::to_string(map.index_map.size()) +
                                                  " of " + std::to_string(map.parts.size()) + " parts");
  if (!map.pseudo() && domain.size() != codomain.size())
    fail(ErrorCode::component_count_mismatch, "special maps need equally many components on both sides");
  std::vector<bool> used(codomain.size(), false);
  for (const auto j : map.index_map) {
    if (j >= codomain.size())
      fail(ErrorCode::index_out_of_range, "component " + std::to_string(j + 1) + " does not exist in " +
                                              codomain.name());
    if (used[j])
      fail(ErrorCode::non_injective_index_map, "two parts of " + map.name + " land in component " +
                                                   std::to_string(j + 1));
    used[j] = true;
  }
  AxiomReport report;
  for (std::size_t i = 0; i < map.parts.size(); ++i) {
    const FiniteMap& t = map.parts[i];
    if (!(t.domain().members() == domain[i].members()))
      fail(ErrorCode::domain_mismatch, "part " + std::to_string(i + 1) + " of " + map.name +
                                           " is not defined on component " + std::to_string(i + 1));
    if (!t.codomain().members().subset_of(codomain[map.index_map[i]].members()))
      fail(ErrorCode::codomain_mismatch, "part " + std::to_string(i + 1) + " of " + map.name +
                                             " does not land in component " + std::to_string(map.index_map[i] + 1));
    report.absorb(verify_linear_map(t, domain[i].profile()), "part " + std::to_string(i + 1));
  }
  if (map.pseudo()) report.notes.emplace_back("pseudo");
  return report;
}

FiniteMap compose_maps(const FiniteMap& u, const FiniteMap& t) {
  if (t.codomain().carrier() != u.domain().carrier())
    fail(ErrorCode::domain_mismatch, "cannot compose " + u.name() + " after " + t.name());
  std::vector<Code> table;
  table.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto img = u.try_image(t.image_at(i));
    if (!img)
      fail(ErrorCode::domain_mismatch, t.name() + " sends " + t.domain().carrier().format(t.domain().members().at(i)) +
                                           " outside the domain of " + u.name());
    table.push_back(*img);
  }
  return {u.name() + "∘" + t.name(), t.domain_ptr(), u.codomain_ptr(), std::move(table)};
}

FiniteMap map_power(const FiniteMap& t, unsigned k) {
  if (k == 0) fail(ErrorCode::invalid_structure, "map powers start at 1");
  FiniteMap r = t;
  for (unsigned i = 1; i < k; ++i) r = compose_maps(t, r);
  return r;
}

FiniteMap invert_map(const FiniteMap& t) {
  const ComponentSpace& W = t.codomain();
  const Carrier& dc = t.domain().carrier();
  const Carrier& cc = W.carrier();
  std::vector<std::optional<Code>> pre(W.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t j = *W.members().index_of(t.image_at(i));
    if (pre[j])
      fail(ErrorCode::not_bijective, t.name() + " is not injective: " + dc.format(*pre[j]) + " and " +
                                         dc.format(t.domain().members().at(i)) + " both map to " +
                                         cc.format(t.image_at(i)));
    pre[j] = t.domain().members().at(i);
  }
  std::vector<Code> table;
  table.reserve(W.size());
  for (std::size_t j = 0; j < W.size(); ++j) {
    if (!pre[j])
      fail(ErrorCode::not_bijective, t.name() + " is not surjective: nothing maps to " + cc.format(W.members().at(j)));
    table.push_back(*pre[j]);
  }
  FiniteMap inv(t.name() + "⁻¹", t.codomain_ptr(), t.domain_ptr(), std::move(table));
  if (!(compose_maps(inv, t) == FiniteMap::identity(t.domain_ptr())) ||
      !(compose_maps(t, inv) == FiniteMap::identity(t.codomain_ptr())))
    throw std::logic_error("inverse of " + t.name() + " does not round-trip");
  return inv;
}

bool is_idempotent(const FiniteMap& t) {
  if (!t.is_operator()) fail(ErrorCode::domain_mismatch, t.name() + " is not an operator");
  return compose_maps(t, t) == t;
}

FiniteMap scale_map(const Element& s, const FiniteMap& t) {
  const Carrier& cc = t.codomain().carrier();
  return FiniteMap::from_function("s·" + t.name(), t.domain_ptr(), t.codomain_ptr(), [&](Code v) {
    auto r = cc.try_act(s.carrier(), s.code(), t.image(v));
    if (!r) fail(ErrorCode::image_outside_codomain, s.to_string() + "·" + t.name() + " leaves " + cc.name());
    return *r;
  });
}

FiniteMap add_maps(const FiniteMap& t, const FiniteMap& u) {
  require_same_spaces(t, u);
  const Carrier& cc = t.codomain().carrier();
  std::vector<Code> table;
  table.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto r = cc.try_add(t.image_at(i), u.image_at(i));
    if (!r) fail(ErrorCode::image_outside_codomain, t.name() + "+" + u.name() + " leaves " + cc.name());
    table.push_back(*r);
  }
  return {t.name() + "+" + u.name(), t.domain_ptr(), t.codomain_ptr(), std::move(table)};
}

SpacePtr scalar_space(const ComponentSpace& space) {
  const ScalarSet& S = space.scalars();
  return make_space(S.name(), S.members(), ProfileId::set_vs, space.scalars_ptr());
}

AxiomReport verify_functional(const FiniteMap& f, const ComponentSpace& space) {
  if (!(f.domain().members() == space.members()))
    fail(ErrorCode::domain_mismatch, f.name() + " is not defined on " + space.name());
  if (!(f.codomain().members() == space.scalars().members()))
    fail(ErrorCode::codomain_mismatch, f.name() + " does not land in the scalar set of " + space.name());
  AxiomReport report = verify_linear_map(f, ProfileId::set_vs);
  for (auto& v : report.violations)
    if (v.axiom == "map-scalar") v.axiom = "functional";
  return report;
}

std::vector<FiniteMap> annihilator(const std::vector<Element>& a, const SpacePtr& space, std::uint64_t cap) {
  const ComponentSpace& V = *space;
  const ScalarSet& S = V.scalars();
  const Carrier& sc = S.carrier();
  if (!S.members().contains(sc.zero()))
    fail(ErrorCode::invalid_structure, "annihilators need 0 in the scalar set of " + V.name());
  std::vector<std::size_t> vanish;
  for (const auto& x : a) {
    if (x.carrier() != V.carrier() || !V.contains(x.code()))
      fail(ErrorCode::not_a_subset, x.to_string() + " is not an element of " + V.name());
    vanish.push_back(*V.members().index_of(x.code()));
  }
  const std::uint64_t total = saturating_pow(S.size(), V.size(), cap);
  if (total > cap)
    fail(ErrorCode::cap_exceeded, "enumerating |S|^|V| maps on " + V.name() + " exceeds the cap of " +
                                      std::to_string(cap));
  // Precomputed action: target index of c·v inside V, or none.
  const std::size_t n = V.size(), m = S.size();
  std::vector<std::optional<std::size_t>> act(m * n);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      auto r = V.carrier().try_act(sc, S.members().at(c), V.members().at(i));
      if (r) act[c * n + i] = V.members().index_of(*r);
    }
  SpacePtr codomain = scalar_space(V);
  std::vector<FiniteMap> out;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Code> table(n);
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < n; ++i) table[i] = S.members().at(digit[i]);
    bool ok = std::all_of(vanish.begin(), vanish.end(), [&](std::size_t i) { return table[i] == sc.zero(); });
    for (std::size_t c = 0; ok && c < m; ++c)
      for (std::size_t i = 0; ok && i < n; ++i) {
        const auto& j = act[c * n + i];
        auto rhs = sc.try_act(sc, S.members().at(c), table[i]);
        ok = j && rhs && table[*j] == *rhs;
      }
    if (ok) out.emplace_back("f" + std::to_string(out.size() + 1), space, codomain, table);
    for (std::size_t i = n; i-- > 0;) {  // odometer, first element most significant
      if (++digit[i] < m) break;
      digit[i] = 0;
    }
  }
  return out;
}

namespace {

using Entries = std::vector<std::int64_t>;

const std::vector<std::string> kRules{"identity", "zero",    "transpose",     "reverse", "sum_entries", "select",
                                      "permute",  "project", "constant_fill", "scale",   "translate",   "constant"};

[[noreturn]] void shape(const std::string& rule, const std::string& why) {
  fail(ErrorCode::shape_mismatch, "rule " + rule + ": " + why);
}

void need_args(const std::string& rule, const std::vector<std::int64_t>& args, std::size_t n) {
  if (args.size() != n)
    shape(rule, "expects " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()));
}

}  // namespace

bool is_known_rule(const std::string& rule) { return std::find(kRules.begin(), kRules.end(), rule) != kRules.end(); }

FiniteMap make_rule_map(std::string name, SpacePtr domain, SpacePtr codomain, const std::string& rule,
                        const std::vector<std::int64_t>& args) {
  if (!is_known_rule(rule)) fail(ErrorCode::unresolved_reference, "unknown map rule " + rule);
  const Carrier& dc = domain->carrier();
  const Carrier& cc = codomain->carrier();
  const std::size_t dk = dc.entry_count(), ck = cc.entry_count();
  std::function<Code(Code)> f;

  if (rule == "identity") {
    need_args(rule, args, 0);
    if (dc != cc) shape(rule, "domain and codomain carriers differ");
    f = [](Code v) { return v; };
  } else if (rule == "zero") {
    need_args(rule, args, 0);
    f = [z = cc.zero()](Code) { return z; };
  } else if (dc.is_rational() || cc.is_rational()) {
    if (dc != cc) shape(rule, "rational maps need equal carriers");
    if (rule == "scale" || rule == "translate" || rule == "constant") {
      need_args(rule, args, 1);
      const Rational k(args[0]);
      f = [&cc, k, rule, label = name](Code v) {
        std::optional<Rational> r;
        if (rule == "scale") r = Rational::checked_mul(k, cc.rational(v));
        if (rule == "translate") r = Rational::checked_add(k, cc.rational(v));
        if (rule == "constant") r = k;
        auto code = r ? cc.encode_rational(*r) : std::nullopt;
        if (!code) fail(ErrorCode::image_outside_codomain, "map " + label + " leaves " + cc.name());
        return *code;
      };
    } else {
      shape(rule, "not available on rational carriers");
    }
  } else if (rule == "transpose") {
    need_args(rule, args, 0);
    if (cc.rows() != dc.cols() || cc.cols() != dc.rows()) shape(rule, "codomain must have the transposed shape");
    f = [&dc, &cc](Code v) {
      const Entries e = dc.entries(v);
      Entries out(e.size());
      for (std::uint32_t i = 0; i < dc.rows(); ++i)
        for (std::uint32_t j = 0; j < dc.cols(); ++j) out[j * dc.rows() + i] = e[i * dc.cols() + j];
      return cc.encode(out);
    };
  } else if (rule == "reverse") {
    need_args(rule, args, 0);
    if (dk != ck) shape(rule, "domain and codomain need the same number of entries");
    f = [&dc, &cc](Code v) {
      Entries e = dc.entries(v);
      std::reverse(e.begin(), e.end());
      return cc.encode(e);
    };
  } else if (rule == "sum_entries") {
    need_args(rule, args, 0);
    if (ck != 1) shape(rule, "codomain must hold single values");
    f = [&dc, &cc](Code v) {
      std::int64_t s = 0;
      for (const auto x : dc.entries(v)) s += x;
      return cc.encode(Entries{s});
    };
  } else if (rule == "select" || rule == "permute") {
    if (args.size() != ck) shape(rule, "needs one index per codomain entry (" + std::to_string(ck) + ")");
    for (const auto i : args)
      if (i < 0 || static_cast<std::size_t>(i) > dk) shape(rule, "index " + std::to_string(i) + " out of range");
    if (rule == "permute") {
      Entries sorted = args;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<std::int64_t>(i + 1) || dk != ck) shape(rule, "arguments are not a permutation");
    }
    f = [&dc, &cc, args](Code v) {
      const Entries e = dc.entries(v);
      Entries out;
      for (const auto i : args) out.push_back(i == 0 ? 0 : e[static_cast<std::size_t>(i - 1)]);
      return cc.encode(out);
    };
  } else if (rule == "project") {
    if (dk != ck) shape(rule, "domain and codomain need the same number of entries");
    std::vector<bool> keep(dk, false);
    for (const auto i : args) {
      if (i < 1 || static_cast<std::size_t>(i) > dk) shape(rule, "index " + std::to_string(i) + " out of range");
      keep[static_cast<std::size_t>(i - 1)] = true;
    }
    f = [&dc, &cc, keep](Code v) {
      Entries e = dc.entries(v);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (!keep[i]) e[i] = 0;
      return cc.encode(e);
    };
  } else if (rule == "constant_fill") {
    need_args(rule, args, 1);
    if (args[0] < 1 || static_cast<std::size_t>(args[0]) > dk) shape(rule, "index out of range");
    const auto k = static_cast<std::size_t>(args[0] - 1);
    f = [&dc, &cc, k, ck](Code v) { return cc.encode(Entries(ck, dc.entries(v)[k])); };
  } else if (rule == "scale") {
    need_args(rule, args, 1);
    if (dk != ck) shape(rule, "domain and codomain need the same number of entries");
    f = [&dc, &cc, s = args[0]](Code v) {
      Entries e = dc.entries(v);
      const auto n = static_cast<std::int64_t>(cc.modulus());
      const auto r = static_cast<std::uint64_t>((s % n + n) % n);
      for (auto& x : e) x = static_cast<std::int64_t>(static_cast<std::uint64_t>(x) * r % cc.modulus());
      return cc.encode(e);
    };
  } else if (rule == "translate") {
    if (dk != ck) shape(rule, "domain and codomain need the same number of entries");
    need_args(rule, args, dk);
    f = [&dc, &cc, args](Code v) {
      Entries e = dc.entries(v);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += args[i];
      return cc.encode(e);
    };
  } else {  // constant
    need_args(rule, args, ck);
    f = [c = cc.encode(args)](Code) { return c; };
  }
  return FiniteMap::from_function(std::move(name), std::move(domain), std::move(codomain), f);
}

}  // namespace setalg
