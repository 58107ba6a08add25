#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

#include "setalg/dsl.hpp"

namespace setalg::dsl {

LocatedError::LocatedError(ErrorCode code, Location at, const std::string& message)
    : Error(code, std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + message), at_(at) {}

namespace {

std::string expected_text(const std::string& token, const std::vector<std::string>& expected) {
  std::string s = "unexpected " + token;
  if (!expected.empty()) {
    s += ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) s += i + 1 == expected.size() ? " or " : ", ";
      s += expected[i];
    }
  }
  return s;
}

}  // namespace

SyntaxError::SyntaxError(Location at, std::string token, std::vector<std::string> expected)
    : LocatedError(ErrorCode::syntax_error, at, expected_text(token, expected)),
      token_(std::move(token)),
      expected_(std::move(expected)) {}

bool Literal::ground() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.kind == Entry::Kind::value; });
}

bool operator==(const Document& a, const Document& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i)
    if (!(a.statements[i].statement == b.statements[i].statement)) return false;
  return true;
}

namespace {

enum class Tok { ident, integer, punct, newline, end };

struct Token {
  Tok kind;
  std::string text;
  Location at;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::newline: return "end of line";
    case Tok::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    int depth = 0;
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      const Location at{line_, col_};
      if (ch == '\n') {
        if (depth == 0 && !out.empty() && out.back().kind != Tok::newline) out.push_back({Tok::newline, "\n", at});
        advance();
        line_++;
        col_ = 1;
        continue;
      }
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        advance();
        continue;
      }
      if (ch == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      if (is_ident_start(ch)) {
        std::string word;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) word += take();
        out.push_back({Tok::ident, word, at});
        continue;
      }
      const bool negative = ch == '-' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]);
      if (is_digit(ch) || negative) {
        std::string digits;
        digits += take();
        while (pos_ < src_.size() && is_digit(src_[pos_])) digits += take();
        out.push_back({Tok::integer, digits, at});
        continue;
      }
      if (src_.substr(pos_, 3) == "(+)") {
        take(3);
        out.push_back({Tok::punct, "(+)", at});
        continue;
      }
      if (src_.substr(pos_, 2) == "->" || src_.substr(pos_, 2) == "..") {
        out.push_back({Tok::punct, std::string(src_.substr(pos_, 2)), at});
        take(2);
        continue;
      }
      if (std::string_view("()[]{},;:=*/").find(ch) != std::string_view::npos) {
        if (ch == '(' || ch == '[' || ch == '{') ++depth;
        if ((ch == ')' || ch == ']' || ch == '}') && depth > 0) --depth;
        out.push_back({Tok::punct, std::string(1, take()), at});
        continue;
      }
      std::string bad(1, ch);
      // Report a whole UTF-8 sequence as the offending token.
      for (std::size_t k = pos_ + 1; k < src_.size() && (static_cast<unsigned char>(src_[k]) & 0xC0) == 0x80; ++k)
        bad += src_[k];
      throw SyntaxError(at, "'" + bad + "'", {});
    }
    if (!out.empty() && out.back().kind != Tok::newline) out.push_back({Tok::newline, "\n", {line_, col_}});
    out.push_back({Tok::end, "", {line_, col_}});
    return out;
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c) || c == '\''; }

  void advance() {
    // Columns count code points, so continuation bytes do not advance.
    if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) ++col_;
    ++pos_;
  }
  char take() {
    const char c = src_[pos_];
    advance();
    return c;
  }
  void take(int n) {
    for (int i = 0; i < n; ++i) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

enum class Kind { scalars, space, special, nspace, map, fuzzy, decomp };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::scalars: return "scalar set";
    case Kind::space: return "space";
    case Kind::special: return "special space";
    case Kind::nspace: return "n-space";
    case Kind::map: return "map";
    case Kind::fuzzy: return "fuzzy map";
    case Kind::decomp: return "decomposition";
  }
  return "";
}

enum class ArgKind { space, special, structure, map, decomp, fuzzy, literal, integer, word };

struct Signature {
  Signature(std::vector<ArgKind> f, std::size_t opt = 0, std::optional<ArgKind> t = std::nullopt, std::size_t min = 0)
      : fixed(std::move(f)), optional(opt), tail(t), min_tail(min) {}

  std::vector<ArgKind> fixed;
  std::size_t optional;  // trailing fixed args that may be omitted
  std::optional<ArgKind> tail;
  std::size_t min_tail;
};

const std::map<std::string, Signature>& signatures() {
  using A = ArgKind;
  static const std::map<std::string, Signature> table{
      {"verify", {{A::structure}}},
      {"dim", {{A::structure, A::integer}, 1}},
      {"span", {{A::space}, 0, A::literal, 1}},
      {"independent", {{A::space}, 0, A::literal, 1}},
      {"map", {{A::map}}},
      {"idempotent", {{A::map}}},
      {"power", {{A::map, A::integer}}},
      {"inverse", {{A::map}}},
      {"special_map", {{A::special, A::special}, 0, A::map, 1}},
      {"decompose", {{A::decomp}}},
      {"projections", {{A::decomp}}},
      {"fuzzy", {{A::fuzzy, A::word}, 1}},
      {"fuzzy_special", {{A::special}, 0, A::fuzzy, 1}},
      {"classify", {{A::special}}},
      {"subspace", {{A::space, A::space}}},
      {"dual", {{A::space}}},
      {"annihilator", {{A::space}, 0, A::literal, 0}},
      {"intersect", {{A::space}, 0, A::space, 1}},
      {"adjoin_zero", {{A::space}}},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  Document run() {
    Document doc;
    while (peek().kind == Tok::newline) ++i_;
    while (peek().kind != Tok::end) {
      const Location at = peek().at;
      doc.statements.push_back({statement(), at});
      end_of_statement();
    }
    return doc;
  }

  Literal single_literal() {
    if (!at_literal()) unexpected({"literal"});
    Literal lit = ground_literal();
    if (peek().kind == Tok::newline) ++i_;
    if (peek().kind != Tok::end) unexpected({"end of input"});
    return lit;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return t_[std::min(i_ + k, t_.size() - 1)]; }
  const Token& next() { return t_[std::min(i_++, t_.size() - 1)]; }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    throw SyntaxError(peek().at, describe(peek()), std::move(expected));
  }
  bool at_punct(std::string_view p) const { return peek().kind == Tok::punct && peek().text == p; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::ident && peek().text == w; }
  void punct(std::string_view p) {
    if (!at_punct(p)) unexpected({"'" + std::string(p) + "'"});
    ++i_;
  }
  void word(std::string_view w) {
    if (!at_word(w)) unexpected({"'" + std::string(w) + "'"});
    ++i_;
  }
  bool accept(std::string_view p) {
    if (!at_punct(p)) return false;
    ++i_;
    return true;
  }
  void end_of_statement() {
    if (peek().kind == Tok::end) return;
    if (peek().kind != Tok::newline) unexpected({"end of line"});
    while (peek().kind == Tok::newline) ++i_;
  }

  std::string identifier(const char* what) {
    if (peek().kind != Tok::ident || keywords().count(peek().text)) unexpected({what});
    return next().text;
  }

  std::int64_t integer(const char* what = "integer") {
    if (peek().kind != Tok::integer) unexpected({what});
    const Token& tok = next();
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc() || p != tok.text.data() + tok.text.size())
      throw SyntaxError(tok.at, describe(tok), {"integer within 64 bits"});
    return v;
  }

  Rational rational(const char* what = "number") {
    const Location at = peek().at;
    const std::int64_t p = integer(what);
    if (!accept("/")) return Rational(p);
    const Location qd = peek().at;
    const std::int64_t q = integer("denominator");
    if (q <= 0) throw LocatedError(ErrorCode::syntax_error, qd, "denominator must be positive");
    (void)at;
    return Rational(p, q);
  }

  static const std::set<std::string>& keywords() {
    static const std::set<std::string> k{"scalars", "space", "special", "nspace", "map", "fuzzy", "decomp", "check",
                                         "all", "over", "role", "table", "rule", "on", "fragment", "poly",
                                         "default", "zero", "deg", "sum"};
    return k;
  }

  void declare(const std::string& name, Kind kind, Location at) {
    if (!names_.emplace(name, kind).second)
      throw LocatedError(ErrorCode::duplicate_name, at, "'" + name + "' is already declared");
  }

  std::string reference(const std::vector<Kind>& allowed) {
    const Token tok = peek();
    const std::string name = identifier("name");
    const auto it = names_.find(name);
    if (it == names_.end())
      throw LocatedError(ErrorCode::unresolved_reference, tok.at, "'" + name + "' is not declared");
    if (std::find(allowed.begin(), allowed.end(), it->second) == allowed.end()) {
      std::string want;
      for (std::size_t k = 0; k < allowed.size(); ++k) want += (k ? " or " : "") + std::string(kind_name(allowed[k]));
      throw LocatedError(ErrorCode::unresolved_reference, tok.at,
                         "'" + name + "' is a " + kind_name(it->second) + ", expected a " + want);
    }
    return name;
  }

  Statement statement() {
    if (peek().kind != Tok::ident) unexpected({"statement keyword"});
    const std::string kw = peek().text;
    if (kw == "scalars") return scalars_stmt();
    if (kw == "space") return space_stmt();
    if (kw == "special") return special_stmt();
    if (kw == "nspace") return nspace_stmt();
    if (kw == "map") return map_stmt();
    if (kw == "fuzzy") return fuzzy_stmt();
    if (kw == "decomp") return decomp_stmt();
    if (kw == "check") return check_stmt();
    unexpected({"scalars", "space", "special", "nspace", "map", "fuzzy", "decomp", "check"});
  }

  Carrier carrier() {
    const Token tok = peek();
    if (tok.kind != Tok::ident) unexpected({"carrier"});
    static const std::map<std::string, std::size_t> arity{
        {"zmod", 1}, {"zmod_tuple", 2}, {"zmod_matrix", 3}, {"zmod_poly", 2}, {"rational", 1}};
    const auto it = arity.find(tok.text);
    if (it == arity.end()) unexpected({"zmod", "zmod_tuple", "zmod_matrix", "zmod_poly", "rational"});
    ++i_;
    punct("(");
    std::vector<std::int64_t> a;
    for (std::size_t k = 0; k < it->second; ++k) {
      if (k) punct(",");
      a.push_back(integer("carrier parameter"));
    }
    punct(")");
    auto u32 = [&](std::int64_t v) {
      if (v < 0 || v > 0xFFFFFFFFLL) throw LocatedError(ErrorCode::invalid_structure, tok.at, "carrier parameter out of range");
      return static_cast<std::uint32_t>(v);
    };
    try {
      if (tok.text == "zmod") return Carrier::zmod(u32(a[0]));
      if (tok.text == "zmod_tuple") return Carrier::zmod_tuple(u32(a[0]), u32(a[1]));
      if (tok.text == "zmod_matrix") return Carrier::zmod_matrix(u32(a[0]), u32(a[1]), u32(a[2]));
      if (tok.text == "zmod_poly") return Carrier::zmod_poly(u32(a[0]), u32(a[1]));
      return Carrier::bounded_rational(a[0]);
    } catch (const LocatedError&) {
      throw;
    } catch (const Error& e) {
      throw LocatedError(e.code(), tok.at, e.what());
    }
  }

  Entry entry(bool top_level) {
    Entry e;
    if (accept("*")) {
      e.kind = Entry::Kind::wildcard;
      return e;
    }
    if (!top_level && peek().kind == Tok::ident && !keywords().count(peek().text)) {
      e.kind = Entry::Kind::variable;
      e.variable = next().text;
      return e;
    }
    if (!top_level && accept("{")) {
      e.kind = Entry::Kind::choice;
      while (!accept("}")) {
        e.choices.push_back(rational("choice value"));
        accept(",");
      }
      if (e.choices.empty()) unexpected({"choice value"});
      std::sort(e.choices.begin(), e.choices.end());
      e.choices.erase(std::unique(e.choices.begin(), e.choices.end()), e.choices.end());
      return e;
    }
    if (peek().kind != Tok::integer) unexpected(top_level ? std::vector<std::string>{"literal"}
                                                          : std::vector<std::string>{"entry"});
    e.value = rational();
    if (accept("..")) {
      if (!e.value.is_integer()) throw LocatedError(ErrorCode::syntax_error, peek().at, "range bounds must be integers");
      e.kind = Entry::Kind::range;
      e.lo = e.value.num();
      e.hi = integer("range end");
      e.value = Rational();
      if (e.hi < e.lo) throw LocatedError(ErrorCode::syntax_error, peek().at, "empty range");
    }
    return e;
  }

  std::vector<Entry> entry_list(const char* close) {
    std::vector<Entry> out;
    out.push_back(entry(false));
    while (accept(",")) out.push_back(entry(false));
    punct(close);
    return out;
  }

  bool at_literal() const {
    return peek().kind == Tok::integer || at_punct("(") || at_punct("[") || at_punct("*") || at_word("poly");
  }

  Literal literal() {
    Literal lit;
    if (accept("(")) {
      lit.shape = Literal::Shape::tuple;
      lit.entries = entry_list(")");
    } else if (at_word("poly")) {
      ++i_;
      punct("(");
      lit.shape = Literal::Shape::poly;
      lit.entries = entry_list(")");
    } else if (accept("[")) {
      lit.shape = Literal::Shape::matrix;
      lit.rows = 0;
      std::size_t width = 0;
      do {
        const Location at = peek().at;
        punct("[");
        auto row = entry_list("]");
        if (lit.rows && row.size() != width)
          throw LocatedError(ErrorCode::shape_mismatch, at, "matrix rows have different lengths");
        width = row.size();
        ++lit.rows;
        lit.entries.insert(lit.entries.end(), row.begin(), row.end());
      } while (accept(";"));
      punct("]");
    } else {
      lit.shape = Literal::Shape::scalar;
      lit.entries.push_back(entry(true));
    }
    return lit;
  }

  MemberSpec member_spec(bool allow_all) {
    MemberSpec m;
    if (allow_all && at_word("all")) {
      ++i_;
      m.all = true;
      m.carrier = carrier();
      return m;
    }
    if (peek().kind != Tok::ident) unexpected(allow_all ? std::vector<std::string>{"'all'", "carrier"}
                                                        : std::vector<std::string>{"carrier"});
    m.carrier = carrier();
    punct("{");
    while (!accept("}")) {
      const Location at = peek().at;
      if (!at_literal()) unexpected({"literal", "'}'"});
      Literal lit = literal();
      if (lit.ground()) {
        try {
          m.ground.push_back(encode_literal(lit, m.carrier));
        } catch (const Error& e) {
          throw LocatedError(e.code(), at, e.what());
        }
      } else if (std::find(m.patterns.begin(), m.patterns.end(), lit) == m.patterns.end()) {
        m.patterns.push_back(std::move(lit));
      }
      accept(",");
    }
    const Carrier& c = m.carrier;
    std::sort(m.ground.begin(), m.ground.end(), [&](Code a, Code b) { return c.less(a, b); });
    m.ground.erase(std::unique(m.ground.begin(), m.ground.end()), m.ground.end());
    return m;
  }

  ScalarsStmt scalars_stmt() {
    word("scalars");
    const Location at = peek().at;
    ScalarsStmt s;
    s.name = identifier("name");
    declare(s.name, Kind::scalars, at);
    punct("=");
    s.members = member_spec(false);
    if (at_word("role")) {
      ++i_;
      if (at_word("semigroup")) s.role = ScalarRole::additive_semigroup;
      else if (at_word("group")) s.role = ScalarRole::additive_group;
      else if (at_word("set")) s.role = ScalarRole::plain_set;
      else unexpected({"semigroup", "group", "set"});
      ++i_;
    }
    return s;
  }

  SpaceStmt space_stmt() {
    word("space");
    const Location at = peek().at;
    SpaceStmt s;
    s.name = identifier("name");
    declare(s.name, Kind::space, at);
    punct(":");
    if (peek().kind != Tok::ident || !parse_profile(peek().text))
      unexpected({"set_vs", "set_la", "semigroup_vs", "semigroup_la", "special_semigroup_la", "group_vs", "group_la"});
    s.profile = *parse_profile(next().text);
    word("over");
    s.scalars = reference({Kind::scalars});
    punct("=");
    s.members = member_spec(true);
    if (at_word("fragment")) {
      ++i_;
      s.fragment = true;
    }
    return s;
  }

  SpecialStmt special_stmt() {
    word("special");
    const Location at = peek().at;
    SpecialStmt s;
    s.name = identifier("name");
    declare(s.name, Kind::special, at);
    punct("=");
    punct("(");
    s.components.push_back(reference({Kind::space}));
    while (accept(",")) s.components.push_back(reference({Kind::space}));
    punct(")");
    return s;
  }

  NSpaceStmt nspace_stmt() {
    word("nspace");
    const Location at = peek().at;
    NSpaceStmt s;
    s.name = identifier("name");
    declare(s.name, Kind::nspace, at);
    punct("=");
    punct("[");
    s.parts.push_back(reference({Kind::special}));
    while (accept(";")) s.parts.push_back(reference({Kind::special}));
    punct("]");
    return s;
  }

  MapStmt map_stmt() {
    word("map");
    const Location at = peek().at;
    MapStmt s;
    s.name = identifier("name");
    declare(s.name, Kind::map, at);
    punct(":");
    s.domain = reference({Kind::space});
    punct("->");
    s.codomain = reference({Kind::space});
    punct("=");
    if (at_word("table")) {
      ++i_;
      punct("{");
      while (!accept("}")) {
        if (!at_literal()) unexpected({"literal", "'}'"});
        Literal from = ground_literal();
        punct("->");
        Literal to = ground_literal();
        s.table.emplace_back(std::move(from), std::move(to));
        accept(";");
      }
    } else if (at_word("rule")) {
      ++i_;
      s.is_rule = true;
      if (peek().kind != Tok::ident) unexpected({"rule name"});
      s.rule = next().text;
      if (accept("(")) {
        if (!at_punct(")")) {
          s.args.push_back(integer("rule argument"));
          while (accept(",")) s.args.push_back(integer("rule argument"));
        }
        punct(")");
      }
    } else {
      unexpected({"'table'", "'rule'"});
    }
    return s;
  }

  Literal ground_literal() {
    const Token tok = peek();
    Literal lit = literal();
    if (!lit.ground()) throw SyntaxError(tok.at, describe(tok), {"ground literal"});
    return lit;
  }

  Pattern pattern() {
    Pattern p;
    if (at_word("default")) {
      ++i_;
      p.kind = Pattern::Kind::fallback;
    } else if (at_word("zero")) {
      ++i_;
      p.kind = Pattern::Kind::zero;
    } else if (at_word("deg")) {
      ++i_;
      punct("=");
      p.kind = Pattern::Kind::degree;
      p.degree = integer("degree");
    } else if (at_word("sum")) {
      ++i_;
      p.kind = Pattern::Kind::sum;
      punct("(");
      if (!accept("*")) {
        do {
          const Location at = peek().at;
          const std::int64_t pos = integer("entry position");
          if (pos < 1) throw LocatedError(ErrorCode::syntax_error, at, "entry positions start at 1");
          p.positions.push_back(static_cast<std::uint32_t>(pos));
        } while (accept(","));
      }
      punct(")");
      punct("=");
      p.target = integer("sum value");
    } else if (accept("{")) {
      p.kind = Pattern::Kind::set;
      while (!accept("}")) {
        if (!at_literal()) unexpected({"literal", "'}'"});
        p.literals.push_back(literal());
        accept(",");
      }
    } else if (at_literal()) {
      p.kind = Pattern::Kind::literal;
      p.literals.push_back(literal());
    } else {
      unexpected({"pattern"});
    }
    return p;
  }

  FuzzyStmt fuzzy_stmt() {
    word("fuzzy");
    const Location at = peek().at;
    FuzzyStmt s;
    s.name = identifier("name");
    declare(s.name, Kind::fuzzy, at);
    word("on");
    s.space = reference({Kind::space});
    punct("=");
    punct("{");
    while (!accept("}")) {
      FuzzyRule r;
      r.pattern = pattern();
      r.value = rational("membership value");
      s.rules.push_back(std::move(r));
      if (!accept(";") && !at_punct("}")) unexpected({"';'", "'}'"});
    }
    return s;
  }

  DecompStmt decomp_stmt() {
    word("decomp");
    const Location at = peek().at;
    DecompStmt s;
    s.name = identifier("name");
    declare(s.name, Kind::decomp, at);
    punct(":");
    s.target = reference({Kind::space});
    punct("=");
    s.summands.push_back(reference({Kind::space}));
    do {
      punct("(+)");
      s.summands.push_back(reference({Kind::space}));
    } while (at_punct("(+)"));
    return s;
  }

  CheckArg arg(ArgKind kind) {
    CheckArg a;
    switch (kind) {
      case ArgKind::space: a.name = reference({Kind::space}); break;
      case ArgKind::special: a.name = reference({Kind::special}); break;
      case ArgKind::structure: a.name = reference({Kind::space, Kind::special, Kind::nspace}); break;
      case ArgKind::map: a.name = reference({Kind::map}); break;
      case ArgKind::decomp: a.name = reference({Kind::decomp}); break;
      case ArgKind::fuzzy: a.name = reference({Kind::fuzzy}); break;
      case ArgKind::word: {
        static const std::vector<std::string> words{"set_vs", "set_la", "semigroup", "semigroup_la", "group"};
        if (peek().kind != Tok::ident || std::find(words.begin(), words.end(), peek().text) == words.end())
          unexpected(words);
        a.name = next().text;
        break;
      }
      case ArgKind::integer:
        a.is_name = false;
        a.literal.entries.push_back(Entry{Entry::Kind::value, Rational(integer()), {}, {}, 0, 0});
        break;
      case ArgKind::literal:
        a.is_name = false;
        a.literal = ground_literal();
        break;
    }
    return a;
  }

  bool at_arg_end() const { return peek().kind == Tok::newline || peek().kind == Tok::end; }

  CheckStmt check_stmt() {
    word("check");
    CheckStmt s;
    if (peek().kind != Tok::ident) unexpected({"check verb"});
    const auto& sig = signatures();
    const auto it = sig.find(peek().text);
    if (it == sig.end()) unexpected(check_verbs());
    s.verb = next().text;
    const Signature& g = it->second;
    for (std::size_t k = 0; k < g.fixed.size(); ++k) {
      if (at_arg_end() && k >= g.fixed.size() - g.optional) break;
      s.args.push_back(arg(g.fixed[k]));
    }
    std::size_t tail = 0;
    if (g.tail)
      while (!at_arg_end()) {
        s.args.push_back(arg(*g.tail));
        ++tail;
      }
    if (tail < g.min_tail) unexpected({"argument"});
    return s;
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
  std::map<std::string, Kind> names_;
};

}  // namespace

const std::vector<std::string>& check_verbs() {
  static const std::vector<std::string> verbs = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : signatures()) v.push_back(k);
    return v;
  }();
  return verbs;
}

Literal parse_literal(std::string_view text) { return Parser(Lexer(text).run()).single_literal(); }

Document parse(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  return Parser(Lexer(text).run()).run();
}

}  // namespace setalg::dsl
