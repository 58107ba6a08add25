#include "setalg/genspan.hpp"

#include <algorithm>
#include <bit>

#include "code_set.hpp"
#include "setalg/error.hpp"

namespace setalg {

namespace {

using internal::CodeSet;

// Bounded-rational additive closures are materialized; beyond this they are refused.
constexpr std::size_t kRationalClosureCap = 1'000'000;
constexpr std::size_t kExactLimit = 64;

/// Incrementally grown span of a generator list under one generation rule.
class SpanBuilder {
 public:
  SpanBuilder(const Carrier& carrier, const ScalarSet& scalars, bool algebra, std::vector<Derivation>* log = nullptr)
      : c_(carrier), S_(scalars), algebra_(algebra), seen_(carrier), log_(log) {
    if (!c_.accepts_scalars(S_.carrier()))
      fail(ErrorCode::incompatible_carrier, "scalars from " + S_.carrier().name() + " do not act on " + c_.name());
  }

  void add_generator(Code b) {
    for (const Code s : S_.members()) {
      auto o = c_.try_act(S_.carrier(), s, b);
      if (!o) continue;
      const Derivation d{Derivation::Kind::scaled, *o, s, b};
      if (!algebra_)
        insert(d);
      else if (c_.is_zmod())
        add_group_generator(d);
      else
        add_rational_generator(d);
    }
  }

  bool contains(Code x) const { return seen_.contains(x); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Code>& elements() const { return elems_; }

  /// Span equals V exactly.
  bool covers(const MemberSet& V) const {
    if (elems_.size() != V.size()) return false;
    if (V.is_full()) return true;
    for (const Code v : V)
      if (!contains(v)) return false;
    return true;
  }

 private:
  bool insert(const Derivation& d) {
    if (!seen_.insert(d.element)) return false;
    elems_.push_back(d.element);
    if (log_) log_->push_back(d);
    return true;
  }

  static Derivation sum(Code a, Code b, Code r) { return {Derivation::Kind::sum, r, a, b}; }

  // H + <g> is the union of the cosets H + k·g, k = 1 .. m, where m·g is the
  // first multiple landing back in H.
  void add_group_generator(const Derivation& dg) {
    const Code g = dg.element;
    if (seen_.contains(g)) return;
    const std::size_t base = elems_.size();
    Derivation dx = dg;
    while (insert(dx)) {
      const Code x = dx.element;
      for (std::size_t i = 0; i < base; ++i) {
        const Code h = elems_[i];
        insert(sum(x, h, *c_.try_add(x, h)));
      }
      dx = sum(x, g, *c_.try_add(x, g));
    }
  }

  void add_rational_generator(const Derivation& dg) {
    if (!insert(dg)) return;
    std::size_t head = elems_.size() - 1;
    while (head < elems_.size()) {
      const Code x = elems_[head++];
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        const Code y = elems_[i];
        auto r = c_.try_add(x, y);
        if (r) insert(sum(x, y, *r));
        if (elems_.size() > kRationalClosureCap)
          fail(ErrorCode::cap_exceeded, "additive closure over " + c_.name() + " exceeds " +
                                            std::to_string(kRationalClosureCap) + " elements");
      }
    }
  }

  const Carrier& c_;
  const ScalarSet& S_;
  bool algebra_;
  CodeSet seen_;
  std::vector<Code> elems_;
  std::vector<Derivation>* log_;
};

const Carrier& common_carrier(const std::vector<Element>& basis) {
  if (basis.empty()) fail(ErrorCode::invalid_structure, "a generating set must be nonempty");
  for (const auto& e : basis)
    if (e.carrier() != basis.front().carrier())
      fail(ErrorCode::incompatible_carrier, "generators live on different carriers");
  return basis.front().carrier();
}

std::vector<Code> codes_of(const std::vector<Element>& basis) {
  std::vector<Code> out;
  out.reserve(basis.size());
  for (const auto& e : basis) out.push_back(e.code());
  return out;
}

bool generates(const std::vector<Code>& basis, const ComponentSpace& V) {
  if (basis.empty()) return false;
  SpanBuilder sb(V.carrier(), V.scalars(), is_algebra_profile(V.profile()));
  for (const Code b : basis) sb.add_generator(b);
  return sb.covers(V.members());
}

void require_subset(const std::vector<Element>& basis, const ComponentSpace& V) {
  for (const auto& b : basis)
    if (b.carrier() != V.carrier() || !V.contains(b.code()))
      fail(ErrorCode::not_a_subset, b.to_string() + " is not an element of " + V.name());
}

/// Exact search over the subsets of a space with at most 64 members.
class ExactSearch {
 public:
  explicit ExactSearch(const ComponentSpace& V) : V_(V), n_(V.size()), algebra_(is_algebra_profile(V.profile())) {
    const Carrier& c = V.carrier();
    const ScalarSet& S = V.scalars();
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    orbit_.assign(n_, 0);
    usable_.assign(n_, true);
    for (std::size_t i = 0; i < n_; ++i)
      for (const Code s : S.members()) {
        auto o = c.try_act(S.carrier(), s, V.members().at(i));
        if (!o) continue;
        if (auto j = V.members().index_of(*o))
          orbit_[i] |= std::uint64_t{1} << *j;
        else
          usable_[i] = false;  // any span containing it leaves V
      }
    for (std::size_t i = 0; i < n_; ++i)
      if (!usable_[i]) orbit_[i] = 0;
    if (algebra_) {
      add_.assign(n_ * n_, -1);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
          auto r = c.try_add(V.members().at(i), V.members().at(j));
          if (!r) continue;
          if (auto k = V.members().index_of(*r))
            add_[i * n_ + j] = static_cast<int>(*k);
          else
            leaks_ = true;  // a spanning set would also produce this sum
        }
      if (c.is_zmod()) {
        // Adding one generator multiplies a subgroup by at most its additive order.
        for (std::size_t i = 0; i < n_; ++i) {
          std::uint64_t order = 1;
          Code x = V.members().at(i);
          while (x != c.zero()) {
            x = *c.try_add(x, V.members().at(i));
            ++order;
          }
          growth_ = std::max(growth_, order);
        }
      }
    }
    suffix_.assign(n_ + 1, 0);
    for (std::size_t i = n_; i-- > 0;) suffix_[i] = suffix_[i + 1] | orbit_[i];
  }

  std::optional<std::vector<std::size_t>> run() {
    if (leaks_) return std::nullopt;
    for (std::size_t k = 1; k <= n_; ++k) {
      chosen_.clear();
      if (dfs(k, 0, 0)) return chosen_;
    }
    return std::nullopt;
  }

 private:
  std::uint64_t extend(std::uint64_t span, std::size_t c) const {
    const std::uint64_t start = span | orbit_[c];
    if (!algebra_) return start;
    std::uint64_t result = start;
    std::uint64_t pending = start;
    while (pending) {
      const int i = std::countr_zero(pending);
      pending &= pending - 1;
      std::uint64_t others = result;
      while (others) {
        const int j = std::countr_zero(others);
        others &= others - 1;
        const int k = add_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
        if (k >= 0 && !(result >> k & 1)) {
          result |= std::uint64_t{1} << k;
          pending |= std::uint64_t{1} << k;
        }
      }
    }
    return result;
  }

  bool hopeless(std::size_t k, std::size_t start, std::uint64_t span) const {
    const std::size_t left = k - chosen_.size();
    if (!algebra_) return (span | suffix_[start]) != full_;
    if (growth_ == 0) return false;
    std::uint64_t reach = std::max<std::uint64_t>(std::popcount(span), 1);
    for (std::size_t i = 0; i < left && reach < n_; ++i) reach *= growth_;
    return reach < n_;
  }

  // Include-first over increasing indices, so the first hit at depth k is the
  // lexicographically least k-subset that spans V.
  bool dfs(std::size_t k, std::size_t start, std::uint64_t span) {
    if (chosen_.size() == k) return span == full_;
    if (hopeless(k, start, span)) return false;
    for (std::size_t c = start; c < n_; ++c) {
      if (!algebra_ && (span | suffix_[c]) != full_) return false;
      if (!usable_[c]) continue;
      const std::uint64_t next = extend(span, c);
      if (next == span) continue;  // c adds nothing, so no minimum basis uses it here
      chosen_.push_back(c);
      if (dfs(k, c + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const ComponentSpace& V_;
  std::size_t n_;
  bool algebra_;
  bool leaks_ = false;
  std::uint64_t full_ = 0;
  std::uint64_t growth_ = 0;
  std::vector<std::uint64_t> orbit_;
  std::vector<bool> usable_;
  std::vector<std::uint64_t> suffix_;
  std::vector<int> add_;
  std::vector<std::size_t> chosen_;
};

std::vector<Element> to_elements(const Carrier& c, const std::vector<Code>& codes) {
  std::vector<Element> out;
  out.reserve(codes.size());
  for (const Code x : codes) out.emplace_back(c, x);
  return out;
}

}  // namespace

SpanResult span_with_derivations(const std::vector<Element>& basis, const ScalarSet& scalars, ProfileId profile) {
  const Carrier& c = common_carrier(basis);
  SpanResult result;
  SpanBuilder sb(c, scalars, is_algebra_profile(profile), &result.derivations);
  for (const auto& b : basis) sb.add_generator(b.code());
  result.members = MemberSet::from_codes(c, sb.elements());
  return result;
}

MemberSet span(const std::vector<Element>& basis, const ScalarSet& scalars, ProfileId profile) {
  const Carrier& c = common_carrier(basis);
  SpanBuilder sb(c, scalars, is_algebra_profile(profile));
  for (const auto& b : basis) sb.add_generator(b.code());
  return MemberSet::from_codes(c, sb.elements());
}

bool is_generating(const std::vector<Element>& basis, const ComponentSpace& space) {
  common_carrier(basis);
  require_subset(basis, space);
  return generates(codes_of(basis), space);
}

std::optional<Dependence> find_dependence(const std::vector<Element>& basis, const ScalarSet& scalars) {
  const Carrier& c = common_carrier(basis);
  std::vector<Code> codes = MemberSet::from_elements(c, basis).codes();
  for (const Code x : codes)
    for (const Code y : codes) {
      if (x == y) continue;
      for (const Code s : scalars.members()) {
        auto r = c.try_act(scalars.carrier(), s, y);
        if (r && *r == x) return Dependence{Element(c, x), Element(scalars.carrier(), s), Element(c, y)};
      }
    }
  return std::nullopt;
}

bool is_irredundant(const std::vector<Element>& basis, const ComponentSpace& space) {
  common_carrier(basis);
  require_subset(basis, space);
  const auto codes = codes_of(basis);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    auto rest = codes;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (generates(rest, space)) return false;
  }
  return true;
}

bool is_irredundant_exhaustive(const std::vector<Element>& basis, const ComponentSpace& space) {
  common_carrier(basis);
  require_subset(basis, space);
  const auto codes = codes_of(basis);
  if (codes.size() > 24) fail(ErrorCode::cap_exceeded, "exhaustive irredundancy check is limited to 24 generators");
  const std::uint32_t all = (std::uint32_t{1} << codes.size()) - 1;
  for (std::uint32_t mask = 1; mask < all; ++mask) {
    std::vector<Code> subset;
    for (std::size_t i = 0; i < codes.size(); ++i)
      if (mask >> i & 1) subset.push_back(codes[i]);
    if (generates(subset, space)) return false;
  }
  return true;
}

std::string_view to_string(Minimality m) noexcept {
  switch (m) {
    case Minimality::exact_minimum: return "exact-minimum";
    case Minimality::irredundant: return "irredundant";
    case Minimality::unverified: return "unverified";
  }
  return "unverified";
}

GeneratingReport minimum_generating_set(const ComponentSpace& V, std::size_t cap) {
  const Carrier& c = V.carrier();
  GeneratingReport report;
  std::vector<Code> basis;
  if (V.size() <= std::min(cap, kExactLimit)) {
    auto found = ExactSearch(V).run();
    if (!found) fail(ErrorCode::not_generable, "no subset of " + V.name() + " generates it");
    for (const auto i : *found) basis.push_back(V.members().at(i));
    report.minimality = Minimality::exact_minimum;
  } else {
    const bool algebra = is_algebra_profile(V.profile());
    SpanBuilder sb(c, V.scalars(), algebra);
    for (const Code v : V.members())
      if (!sb.contains(v)) {
        basis.push_back(v);
        sb.add_generator(v);
      }
    if (!sb.covers(V.members())) fail(ErrorCode::not_generable, "the span of " + V.name() + " is not " + V.name());
    for (std::size_t i = 0; i < basis.size();) {
      auto rest = basis;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (!rest.empty() && generates(rest, V))
        basis = std::move(rest);
      else
        ++i;
    }
    report.minimality = Minimality::irredundant;
  }
  report.basis = to_elements(c, basis);
  report.cardinality = basis.size();
  report.independent = is_independent(report.basis, V.scalars());
  return report;
}

std::vector<GeneratingReport> n_dimension(const SpecialSpace& special, std::size_t cap) {
  std::vector<GeneratingReport> out;
  out.reserve(special.size());
  for (const auto& component : special.components()) out.push_back(minimum_generating_set(*component, cap));
  return out;
}

}  // namespace setalg
