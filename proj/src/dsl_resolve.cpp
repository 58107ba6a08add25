#include "setalg/dsl.hpp"

namespace setalg::dsl {

namespace {

class Resolver {
 public:
  explicit Resolver(const ResolveOptions& opt) : opt_(opt) {}

  Registry run(const Document& doc) {
    for (const auto& st : doc.statements) {
      at_ = st.at;
      try {
        std::visit([this](const auto& s) { apply(s); }, st.statement);
      } catch (const LocatedError&) {
        throw;
      } catch (const Error& e) {
        throw LocatedError(e.code(), at_, e.what());
      } catch (const std::out_of_range&) {
        // Only reachable for documents built by hand; parse() checks references.
        throw LocatedError(ErrorCode::unresolved_reference, at_, "reference to an undeclared name");
      }
    }
    return std::move(reg_);
  }

 private:
  [[noreturn]] void error(ErrorCode code, const std::string& msg) const { throw LocatedError(code, at_, msg); }

  MemberSet members(const MemberSpec& m) {
    const Carrier& c = m.carrier;
    if (m.all) {
      if (!c.is_zmod()) error(ErrorCode::carrier_too_large, c.name() + " is infinite; list its members instead");
      if (c.cardinality() > opt_.enum_cap)
        error(ErrorCode::carrier_too_large, c.name() + " has " + std::to_string(c.cardinality()) +
                                                " elements, above the enumeration cap " + std::to_string(opt_.enum_cap));
      return MemberSet::full(c);
    }
    std::vector<Code> codes = m.ground;
    for (const auto& p : m.patterns) {
      const std::uint64_t room = opt_.enum_cap > codes.size() ? opt_.enum_cap - codes.size() : 0;
      auto more = expand_literal(p, c, room);
      codes.insert(codes.end(), more.begin(), more.end());
    }
    return MemberSet::from_codes(c, std::move(codes));
  }

  void apply(const ScalarsStmt& s) {
    reg_.scalars.emplace(s.name, make_scalars(s.name, members(s.members), s.role));
  }

  void apply(const SpaceStmt& s) {
    MemberSet ms = members(s.members);
    if (ms.empty()) error(ErrorCode::invalid_structure, "space " + s.name + " has no members");
    reg_.spaces.emplace(s.name, make_space(s.name, std::move(ms), s.profile, reg_.scalars.at(s.scalars), s.fragment));
  }

  void apply(const SpecialStmt& s) {
    std::vector<SpacePtr> parts;
    for (const auto& n : s.components) parts.push_back(reg_.spaces.at(n));
    for (const auto& p : parts)
      if (!(p->scalars().members() == parts.front()->scalars().members()))
        error(ErrorCode::shape_mismatch, "components of " + s.name + " are over different scalar sets (" +
                                             parts.front()->scalars().name() + " and " + p->scalars().name() + ")");
    reg_.specials.emplace(s.name, SpecialSpace(s.name, std::move(parts)));
  }

  void apply(const NSpaceStmt& s) {
    std::vector<SpecialSpace> parts;
    for (const auto& n : s.parts) parts.push_back(reg_.specials.at(n));
    reg_.nspaces.emplace(s.name, NSpace(s.name, std::move(parts)));
  }

  void apply(const MapStmt& s) {
    const SpacePtr& dom = reg_.spaces.at(s.domain);
    const SpacePtr& cod = reg_.spaces.at(s.codomain);
    if (s.is_rule) {
      if (!is_known_rule(s.rule)) error(ErrorCode::unresolved_reference, "unknown rule '" + s.rule + "'");
      reg_.maps.emplace(s.name, std::make_shared<const FiniteMap>(make_rule_map(s.name, dom, cod, s.rule, s.args)));
      return;
    }
    std::vector<std::optional<Code>> images(dom->size());
    for (const auto& [from, to] : s.table) {
      const Code x = encode_literal(from, dom->carrier());
      const auto i = dom->members().index_of(x);
      if (!i) error(ErrorCode::domain_mismatch, format_literal(from) + " is not in " + dom->name());
      const Code y = encode_literal(to, cod->carrier());
      if (images[*i] && *images[*i] != y)
        error(ErrorCode::invalid_structure, format_literal(from) + " is mapped twice in " + s.name);
      images[*i] = y;
    }
    std::vector<Code> table;
    table.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i]) error(ErrorCode::incomplete_table, s.name + " has no image for " + dom->element(i).to_string());
      table.push_back(*images[i]);
    }
    reg_.maps.emplace(s.name, std::make_shared<const FiniteMap>(s.name, dom, cod, std::move(table)));
  }

  void apply(const FuzzyStmt& s) {
    const SpacePtr& dom = reg_.spaces.at(s.space);
    const Carrier& c = dom->carrier();
    std::vector<Rational> values;
    values.reserve(dom->size());
    for (const Code v : dom->members()) {
      // Specific rules win in written order; `default` only fills the gaps.
      const FuzzyRule* hit = nullptr;
      const FuzzyRule* fallback = nullptr;
      for (const auto& r : s.rules) {
        if (r.pattern.kind == Pattern::Kind::fallback) {
          if (!fallback) fallback = &r;
        } else if (matches(r.pattern, c, v)) {
          hit = &r;
          break;
        }
      }
      if (!hit) hit = fallback;
      if (!hit) error(ErrorCode::incomplete_table, "no rule of " + s.name + " matches " + c.format(v));
      values.push_back(hit->value);
    }
    reg_.fuzzies.emplace(s.name, MembershipMap(s.name, dom, std::move(values)));
  }

  void apply(const DecompStmt& s) {
    Decomposition d{s.name, reg_.spaces.at(s.target), {}};
    for (const auto& n : s.summands) d.summands.push_back(reg_.spaces.at(n));
    reg_.decomps.emplace(s.name, std::move(d));
  }

  void apply(const CheckStmt& s) { reg_.checks.emplace_back(s, at_); }

  const ResolveOptions& opt_;
  Registry reg_;
  Location at_;
};

}  // namespace

Registry resolve(const Document& doc, const ResolveOptions& options) { return Resolver(options).run(doc); }

}  // namespace setalg::dsl
