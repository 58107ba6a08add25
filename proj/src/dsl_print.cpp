#include "setalg/dsl.hpp"

namespace setalg::dsl {

namespace {

std::string members_text(const MemberSpec& m) {
  if (m.all) return "all " + m.carrier.name();
  std::string s = m.carrier.name() + " {";
  bool first = true;
  auto item = [&](const std::string& t) {
    s += (first ? "" : " ") + t;
    first = false;
  };
  for (const Code x : m.ground) item(m.carrier.format(x));
  for (const auto& p : m.patterns) item(format_literal(p));
  return s + "}";
}

template <class T>
std::string joined(const std::vector<T>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

struct Printer {
  std::string operator()(const ScalarsStmt& s) const {
    std::string out = "scalars " + s.name + " = " + members_text(s.members);
    if (s.role == ScalarRole::additive_semigroup) out += " role semigroup";
    if (s.role == ScalarRole::additive_group) out += " role group";
    return out;
  }
  std::string operator()(const SpaceStmt& s) const {
    return "space " + s.name + " : " + std::string(to_string(s.profile)) + " over " + s.scalars + " = " +
           members_text(s.members) + (s.fragment ? " fragment" : "");
  }
  std::string operator()(const SpecialStmt& s) const {
    return "special " + s.name + " = (" + joined(s.components, ", ") + ")";
  }
  std::string operator()(const NSpaceStmt& s) const { return "nspace " + s.name + " = [" + joined(s.parts, "; ") + "]"; }
  std::string operator()(const MapStmt& s) const {
    std::string out = "map " + s.name + " : " + s.domain + " -> " + s.codomain + " = ";
    if (s.is_rule) {
      out += "rule " + s.rule;
      if (!s.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < s.args.size(); ++i) out += (i ? "," : "") + std::to_string(s.args[i]);
        out += ")";
      }
      return out;
    }
    out += "table {";
    for (std::size_t i = 0; i < s.table.size(); ++i)
      out += (i ? " ; " : " ") + format_literal(s.table[i].first) + " -> " + format_literal(s.table[i].second);
    return out + (s.table.empty() ? "}" : " }");
  }
  std::string operator()(const FuzzyStmt& s) const {
    std::string out = "fuzzy " + s.name + " on " + s.space + " = {";
    for (std::size_t i = 0; i < s.rules.size(); ++i)
      out += (i ? " ; " : " ") + format_pattern(s.rules[i].pattern) + " " + s.rules[i].value.to_string();
    return out + (s.rules.empty() ? "}" : " }");
  }
  std::string operator()(const DecompStmt& s) const {
    return "decomp " + s.name + " : " + s.target + " = " + joined(s.summands, " (+) ");
  }
  std::string operator()(const CheckStmt& s) const {
    std::string out = "check " + s.verb;
    for (const auto& a : s.args) out += " " + (a.is_name ? a.name : format_literal(a.literal));
    return out;
  }
};

}  // namespace

std::string print(const Document& doc) {
  std::string out;
  for (const auto& st : doc.statements) out += std::visit(Printer{}, st.statement) + "\n";
  return out;
}

}  // namespace setalg::dsl
