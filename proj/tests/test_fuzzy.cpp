#include "doctest.h"
#include "helpers.hpp"

#include "setalg/error.hpp"
#include "setalg/fuzzy.hpp"

using namespace setalg;
using namespace testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::invalid_structure;
}

// 1/2 when the top-left entry is nonzero, 1 otherwise.
MembershipMap top_left(const SpacePtr& v) {
  return MembershipMap::from_function("eta1", v, [](const Element& e) {
    return e.entries()[0] == 0 ? Rational(1) : Rational(1, 2);
  });
}

}  // namespace

TEST_CASE("the four membership maps over {0,1} are proven under the semigroup overlay") {
  auto reg = load_fixture("fuzzy_matrix_family.salg");
  for (const char* name : {"eta1", "eta2", "eta3", "eta4"}) {
    CAPTURE(name);
    const auto& eta = reg.fuzzies.at(name);
    CHECK(verify_membership(eta, {FuzzyId::semigroup}).verdict == Verdict::proven);
  }
  const auto& eta1 = reg.fuzzies.at("eta1");
  const auto& c = eta1.domain().carrier();
  CHECK(eta1.value(el(c, {1, 0, 0, 0}).code()) == Rational(1, 2));
  CHECK(eta1.value(el(c, {0, 1, 1, 1}).code()) == Rational(1));
  const auto& eta3 = reg.fuzzies.at("eta3");
  CHECK(eta3.value(el(eta3.domain().carrier(), {0, 1, 1, 1, 0, 0}).code()) == Rational(1, 3));
  std::vector<MembershipMap> all;
  for (const char* name : {"eta1", "eta2", "eta3", "eta4"}) all.push_back(reg.fuzzies.at(name));
  auto r = verify_special_membership(all, reg.specials.at("V"));
  CHECK(r.verdict == Verdict::proven);
}

TEST_CASE("constant one is proven for every overlay") {
  auto s = zscalars_full(5, ScalarRole::additive_group);
  auto v = full_space(Carrier::zmod_tuple(5, 2), ProfileId::group_la, s);
  auto one = MembershipMap::constant("one", v, Rational(1));
  for (auto id : {FuzzyId::set_vs, FuzzyId::set_la, FuzzyId::semigroup, FuzzyId::semigroup_la, FuzzyId::group})
    CHECK(verify_membership(one, {id}).verdict == Verdict::proven);
}

TEST_CASE("reciprocal membership breaks the scalar law under doubling") {
  // eta(s*v) >= eta(v) is required; with eta(v) = 1/v every doubling halves it.
  auto reg = load_fixture("reciprocal_membership.salg");
  const auto& eta = reg.fuzzies.at("eta");
  auto r = verify_membership(eta, {FuzzyId::set_vs});
  REQUIRE(r.verdict == Verdict::fail);
  const auto& w = r.violations.front();
  CHECK(w.axiom == "fuzzy-scalar");
  CHECK(w.find("s")->value() == Rational(2));
  CHECK(w.find("v")->value() == Rational(1));

  // The pair s = 2, v = 3 is also a genuine violation: 1/6 < 1/3.
  const auto& q = eta.domain().carrier();
  const Code three = *q.encode_rational(Rational(3));
  const Code six = *q.encode_rational(Rational(6));
  CHECK(eta.value(six) == Rational(1, 6));
  CHECK(eta.value(six) < eta.value(three));
}

TEST_CASE("leaving a non-fragment domain is a violation, leaving a fragment is skipped") {
  auto q = Carrier::bounded_rational(100);
  std::vector<Element> xs;
  for (int i = 1; i <= 4; ++i) xs.push_back(Element::of_rational(q, Rational(i)));
  auto s = make_scalars("S", MemberSet::from_elements(q, {Element::of_rational(q, Rational(2))}));
  auto frag = make_space("F", MemberSet::from_elements(q, xs), ProfileId::set_vs, s, true);
  auto closed = make_space("C", MemberSet::from_elements(q, xs), ProfileId::set_vs, s, false);
  auto up = [](const Element& e) { return Rational(e.value().num(), 4); };
  auto rf = verify_membership(MembershipMap::from_function("f", frag, up), {FuzzyId::set_vs});
  CHECK(rf.verdict == Verdict::sampled_pass);
  auto rc = verify_membership(MembershipMap::from_function("c", closed, up), {FuzzyId::set_vs});
  REQUIRE(rc.verdict == Verdict::fail);
  CHECK(rc.violations.front().axiom == "domain-closure");
}

TEST_CASE("group overlay checks negation and the unit at zero") {
  auto s = zscalars_full(6, ScalarRole::additive_group);
  auto v = full_space(Carrier::zmod(6), ProfileId::group_la, s);
  auto uneven = MembershipMap("uneven", v, {1, Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 2)});
  CHECK(verify_membership(uneven, {FuzzyId::group}).verdict == Verdict::fail);
  auto fine = MembershipMap("fine", v, {1, Rational(1, 3), Rational(1, 3), Rational(1, 2), Rational(1, 3), Rational(1, 3)});
  CHECK(verify_membership(fine, {FuzzyId::group}).verdict == Verdict::proven);
  auto lop = MembershipMap("lop", v, {1, Rational(1, 3), Rational(1, 3), Rational(1, 2), Rational(1, 3), Rational(1, 2)});
  auto r = verify_membership(lop, {FuzzyId::group});
  REQUIRE(r.verdict == Verdict::fail);
  bool neg = false;
  for (const auto& w : r.violations) neg = neg || w.axiom == "fuzzy-negation";
  CHECK(neg);
  auto low = MembershipMap::constant("half", v, Rational(1, 2));
  auto r2 = verify_membership(low, {FuzzyId::group});
  REQUIRE(r2.verdict == Verdict::fail);
  CHECK(r2.violations.front().axiom == "fuzzy-unit-zero");
}

TEST_CASE("overlay axiom lists") {
  CHECK(fuzzy_axioms(FuzzyId::set_vs) == std::vector<FuzzyAxiom>{FuzzyAxiom::scalar});
  CHECK(fuzzy_axioms(FuzzyId::semigroup) == std::vector<FuzzyAxiom>{FuzzyAxiom::scalar});
  CHECK(fuzzy_axioms(FuzzyId::set_la).size() == 2);
  CHECK(fuzzy_axioms(FuzzyId::group).size() == 4);
  CHECK(FuzzyProfile::of(ProfileId::group_vs).id == FuzzyId::group);
  CHECK(FuzzyProfile::of(ProfileId::special_semigroup_la).id == FuzzyId::semigroup_la);
  CHECK(FuzzyProfile::special(3).n == 3);
}

TEST_CASE("membership maps validate their tables") {
  auto v = full_space(Carrier::zmod(3), ProfileId::set_vs, zscalars(3, {1}));
  CHECK(code_of([&] { MembershipMap("m", v, {1, 1}); }) == ErrorCode::incomplete_table);
  CHECK(code_of([&] { MembershipMap("m", v, {1, Rational(3, 2), 0}); }) == ErrorCode::invalid_membership);
  CHECK(code_of([&] { MembershipMap("m", v, {1, Rational(-1, 2), 0}); }) == ErrorCode::invalid_membership);
  MembershipMap m("m", v, {1, 0, Rational(1, 7)});
  CHECK(m.value(2) == Rational(1, 7));
  CHECK(code_of([&] { m.value(3); }) == ErrorCode::domain_mismatch);
}

TEST_CASE("special overlays") {
  auto s = zscalars(2, {0, 1});
  std::vector<SpacePtr> comps;
  std::vector<MembershipMap> ones, recips;
  for (std::uint32_t n : {3u, 4u, 5u, 6u, 7u}) {
    auto v = full_space(Carrier::zmod(n), ProfileId::semigroup_vs, s, "Z" + std::to_string(n));
    comps.push_back(v);
    ones.push_back(MembershipMap::constant("one", v, 1));
    // 1 at zero, 1/(n-1) elsewhere: the only scalars are 0 and 1.
    recips.push_back(MembershipMap::from_function("r", v, [n](const Element& e) {
      return e.is_zero() ? Rational(1) : Rational(1, n - 1);
    }));
  }
  SpecialSpace ss("SS", comps);
  CHECK(verify_special_membership(ones, ss).verdict == Verdict::proven);
  CHECK(verify_special_membership(recips, ss).verdict == Verdict::proven);
  CHECK(special_fuzzy_name(ss).find("fuzzy") != std::string::npos);

  auto bad = recips;
  bad[2] = MembershipMap::from_function("b", comps[2], [](const Element& e) {
    return e.is_zero() ? Rational(1, 3) : Rational(1);
  });
  auto r = verify_special_membership(bad, ss);
  REQUIRE(r.verdict == Verdict::fail);
  CHECK(r.violations.front().context.find("component 3") != std::string::npos);

  auto fewer = ones;
  fewer.pop_back();
  CHECK(code_of([&] { verify_special_membership(fewer, ss); }) == ErrorCode::component_count_mismatch);
}

TEST_CASE("restriction") {
  auto s = zscalars(2, {0, 1});
  auto c = Carrier::zmod_matrix(2, 2, 2);
  auto v = full_space(c, ProfileId::semigroup_vs, s);
  auto eta = top_left(v);
  REQUIRE(verify_membership(eta, {FuzzyId::semigroup}).proven());
  auto diag = space_of(c, {el(c, {0, 0, 0, 0}).code(), el(c, {1, 1, 1, 1}).code()}, ProfileId::semigroup_vs, s, "W");
  auto r = restrict_membership(eta, diag);
  CHECK(r.values() == std::vector<Rational>{1, Rational(1, 2)});
  CHECK(verify_membership(r, {FuzzyId::semigroup}).proven());

  auto zero = space_of(c, {0}, ProfileId::semigroup_vs, s, "Z");
  CHECK(restrict_membership(eta, zero).values() == std::vector<Rational>{eta.value(0)});
  auto one = restrict_membership(MembershipMap::constant("one", v, 1), diag);
  CHECK(one.values() == std::vector<Rational>{1, 1});

  auto not_sub = space_of(c, {el(c, {1, 0, 0, 0}).code()}, ProfileId::semigroup_vs, s, "N");
  CHECK(code_of([&] { restrict_membership(eta, not_sub); }) == ErrorCode::not_a_subspace);
}

TEST_CASE("pointwise minimum") {
  auto v = full_space(Carrier::zmod(4), ProfileId::set_vs, zscalars(4, {1}));
  MembershipMap a("a", v, {1, Rational(1, 2), 0, 1}), b("b", v, {Rational(1, 3), 1, 1, 0});
  CHECK(pointwise_min(a, b).values() == std::vector<Rational>{Rational(1, 3), Rational(1, 2), 0, 0});
  auto w = full_space(Carrier::zmod(5), ProfileId::set_vs, zscalars(5, {1}));
  CHECK(code_of([&] { pointwise_min(a, MembershipMap::constant("c", w, 1)); }) == ErrorCode::domain_mismatch);
}
