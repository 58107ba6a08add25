#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "setalg/algebra.hpp"
#include "setalg/decomp.hpp"
#include "setalg/error.hpp"
#include "setalg/fuzzy.hpp"
#include "setalg/maps.hpp"

namespace setalg::dsl {

struct Location {
  int line = 0;
  int col = 0;
};

/// Library error tied to a source position (1-based line and column).
class LocatedError : public Error {
 public:
  LocatedError(ErrorCode code, Location at, const std::string& message);
  Location location() const noexcept { return at_; }

 private:
  Location at_;
};

class SyntaxError : public LocatedError {
 public:
  SyntaxError(Location at, std::string token, std::vector<std::string> expected);
  const std::string& token() const noexcept { return token_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::string token_;
  std::vector<std::string> expected_;
};

/// One position of a literal. Anything other than a value makes the literal a
/// pattern that denotes several elements.
struct Entry {
  enum class Kind { value, wildcard, variable, choice, range };
  Kind kind = Kind::value;
  Rational value;
  std::string variable;
  std::vector<Rational> choices;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Element literal or member pattern: `3`, `1/2`, `(a,*,0)`, `[[1,0];[0,1]]`, `poly(1,1)`, `1..20`.
struct Literal {
  enum class Shape { scalar, tuple, matrix, poly };
  Shape shape = Shape::scalar;
  std::vector<Entry> entries;  // matrices row-major
  std::uint32_t rows = 1;

  bool ground() const;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// `all <carrier>` or `<carrier> { items }`. Ground items are canonicalized at
/// parse time; patterns keep their written order.
struct MemberSpec {
  bool all = false;
  Carrier carrier;
  std::vector<Code> ground;
  std::vector<Literal> patterns;

  friend bool operator==(const MemberSpec&, const MemberSpec&) = default;
};

struct Pattern {
  enum class Kind { fallback, zero, literal, set, degree, sum };
  Kind kind = Kind::fallback;
  std::vector<Literal> literals;
  std::int64_t degree = 0;
  std::vector<std::uint32_t> positions;  // 1-based; empty means every entry
  std::int64_t target = 0;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct FuzzyRule {
  Pattern pattern;
  Rational value;
  friend bool operator==(const FuzzyRule&, const FuzzyRule&) = default;
};

struct ScalarsStmt {
  std::string name;
  MemberSpec members;
  ScalarRole role = ScalarRole::plain_set;
  friend bool operator==(const ScalarsStmt&, const ScalarsStmt&) = default;
};

struct SpaceStmt {
  std::string name;
  ProfileId profile = ProfileId::set_vs;
  std::string scalars;
  MemberSpec members;
  bool fragment = false;
  friend bool operator==(const SpaceStmt&, const SpaceStmt&) = default;
};

struct SpecialStmt {
  std::string name;
  std::vector<std::string> components;
  friend bool operator==(const SpecialStmt&, const SpecialStmt&) = default;
};

struct NSpaceStmt {
  std::string name;
  std::vector<std::string> parts;
  friend bool operator==(const NSpaceStmt&, const NSpaceStmt&) = default;
};

struct MapStmt {
  std::string name;
  std::string domain;
  std::string codomain;
  bool is_rule = false;
  std::vector<std::pair<Literal, Literal>> table;
  std::string rule;
  std::vector<std::int64_t> args;
  friend bool operator==(const MapStmt&, const MapStmt&) = default;
};

struct FuzzyStmt {
  std::string name;
  std::string space;
  std::vector<FuzzyRule> rules;
  friend bool operator==(const FuzzyStmt&, const FuzzyStmt&) = default;
};

struct DecompStmt {
  std::string name;
  std::string target;
  std::vector<std::string> summands;
  friend bool operator==(const DecompStmt&, const DecompStmt&) = default;
};

struct CheckArg {
  bool is_name = true;
  std::string name;
  Literal literal;
  friend bool operator==(const CheckArg&, const CheckArg&) = default;
};

struct CheckStmt {
  std::string verb;
  std::vector<CheckArg> args;
  friend bool operator==(const CheckStmt&, const CheckStmt&) = default;
};

using Statement =
    std::variant<ScalarsStmt, SpaceStmt, SpecialStmt, NSpaceStmt, MapStmt, FuzzyStmt, DecompStmt, CheckStmt>;

struct Located {
  Statement statement;
  Location at;
};

struct Document {
  std::vector<Located> statements;

  /// Compares statements only; source positions are ignored.
  friend bool operator==(const Document& a, const Document& b);
};

/// Throws SyntaxError, or LocatedError with duplicate_name, unresolved_reference,
/// out_of_bounds or shape_mismatch.
Document parse(std::string_view text);
/// One ground element literal, e.g. "(1,0)" from the command line.
Literal parse_literal(std::string_view text);
/// Canonical text: one statement per line, LF endings, ground members sorted.
std::string print(const Document& doc);

std::string format_literal(const Literal& lit);
std::string format_pattern(const Pattern& p);

/// Check verbs understood by the command line runner.
const std::vector<std::string>& check_verbs();

inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

struct ResolveOptions {
  std::uint64_t enum_cap = kDefaultEnumCap;
};

struct Registry {
  std::map<std::string, ScalarSetPtr> scalars;
  std::map<std::string, SpacePtr> spaces;
  std::map<std::string, SpecialSpace> specials;
  std::map<std::string, NSpace> nspaces;
  std::map<std::string, std::shared_ptr<const FiniteMap>> maps;
  std::map<std::string, MembershipMap> fuzzies;
  std::map<std::string, Decomposition> decomps;
  std::vector<std::pair<CheckStmt, Location>> checks;
};

/// Materializes every declaration. Throws LocatedError: carrier_too_large when
/// a member set exceeds the enumeration cap, shape_mismatch for rule or
/// literal shapes that do not fit, plus whatever the structure constructors raise.
Registry resolve(const Document& doc, const ResolveOptions& options = {});

/// Expands a literal or pattern over a carrier; throws shape_mismatch,
/// out_of_bounds or carrier_too_large.
std::vector<Code> expand_literal(const Literal& lit, const Carrier& carrier, std::uint64_t cap = kDefaultEnumCap);
/// Code of a ground literal.
Code encode_literal(const Literal& lit, const Carrier& carrier);

bool matches(const Pattern& p, const Carrier& carrier, Code v);

}  // namespace setalg::dsl
