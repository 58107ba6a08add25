#include <chrono>

#include "doctest.h"
#include "helpers.hpp"

#include "setalg/decomp.hpp"
#include "setalg/error.hpp"

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

SpacePtr pattern_space(const Carrier& c, ScalarSetPtr s, const std::function<bool(const std::vector<std::int64_t>&)>& keep,
                       std::string name, ProfileId p = ProfileId::group_vs) {
  std::vector<Code> codes;
  for (Code x = 0; x < c.cardinality(); ++x)
    if (keep(c.entries(x))) codes.push_back(x);
  return space_of(c, std::move(codes), p, std::move(s), std::move(name));
}

struct Z12Square {
  Carrier c = Carrier::zmod_tuple(12, 2);
  ScalarSetPtr s = zscalars_full(12, ScalarRole::additive_group);
  SpacePtr v = full_space(c, ProfileId::group_vs, s, "V");
  SpacePtr x_axis = pattern_space(c, s, [](auto& e) { return e[1] == 0; }, "X");
  SpacePtr y_axis = pattern_space(c, s, [](auto& e) { return e[0] == 0; }, "Y");
  SpacePtr diagonal = pattern_space(c, s, [](auto& e) { return e[0] == e[1]; }, "D");
};

}  // namespace

TEST_CASE("Z12^4 splits as a direct sum of three summands, with projections") {
  auto reg = load_fixture("z12_4_projections.salg");
  const auto& d = reg.decomps.at("D");
  REQUIRE(verify_direct_sum(d).verdict == Verdict::proven);
  auto p1 = projection_onto(d, 0), p2 = projection_onto(d, 1), p3 = projection_onto(d, 2);
  const auto& c = d.target->carrier();
  const Element v = el(c, {3, 5, 7, 11});
  CHECK(p1.apply(v) == el(c, {3, 5, 0, 0}));
  CHECK(p2.apply(v) == el(c, {0, 0, 7, 0}));
  CHECK(p3.apply(v) == el(c, {0, 0, 0, 11}));
  auto t0 = std::chrono::steady_clock::now();
  auto fam = projection_family(d);
  auto r = verify_projection_family(fam);
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.verdict == Verdict::proven);
  CHECK(fam.front().size() == 20736);
  CHECK(dt < 5.0);
  CHECK(fam[0].name() == "P1");
}

TEST_CASE("trivial decompositions") {
  auto s = zscalars_full(3, ScalarRole::additive_group);
  auto zero = space_of(Carrier::zmod(3), {0}, ProfileId::group_vs, s, "Z");
  Decomposition d{"D", zero, {zero}};
  CHECK(verify_direct_sum(d).verdict == Verdict::proven);
  auto v = full_space(Carrier::zmod_tuple(3, 2), ProfileId::group_vs, s);
  Decomposition whole{"W", v, {v}};
  CHECK(projection_onto(whole, 0) == FiniteMap::identity(v));
  CHECK(verify_projection_family({FiniteMap::identity(v)}).verdict == Verdict::proven);
  CHECK(code_of([&] { projection_onto(whole, 1); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("overlapping summands fail the intersection condition") {
  Z12Square z;
  auto line = pattern_space(z.c, z.s, [](auto& e) { return e[1] == 0; }, "L");
  Decomposition d{"D", z.v, {line, z.v}};
  auto r = verify_direct_sum(d);
  REQUIRE(r.verdict == Verdict::fail);
  CHECK(r.violations.front().axiom == "intersection");
  CHECK(r.violations.front().find("v")->to_string() == "(1,0)");
  CHECK(code_of([&] { projection_onto(d, 0); }) == ErrorCode::not_a_direct_sum);
}

TEST_CASE("a target without zero is refused") {
  auto s = zscalars(12, {1});
  auto v = space_of(Carrier::zmod(12), {1, 5}, ProfileId::set_vs, s);
  Decomposition d{"D", v, {v}};
  CHECK(code_of([&] { verify_direct_sum(d); }) == ErrorCode::no_zero_element);
}

TEST_CASE("a duplicated projection fails the sum condition") {
  auto reg = load_fixture("z12_4_projections.salg");
  auto p1 = projection_onto(reg.decomps.at("D"), 0);
  auto r = verify_projection_family({p1, p1});
  REQUIRE(r.verdict == Verdict::fail);
  bool saw_sum = false;
  for (const auto& v : r.violations) saw_sum = saw_sum || v.axiom == "sum-identity";
  CHECK(saw_sum);
}

TEST_CASE("decompositions of Z12^2 are not unique") {
  Z12Square z;
  Decomposition a{"A", z.v, {z.x_axis, z.y_axis}};
  Decomposition b{"B", z.v, {z.x_axis, z.diagonal}};
  CHECK(verify_direct_sum(a).proven());
  CHECK(verify_direct_sum(b).proven());
  CHECK_FALSE(projection_onto(a, 0) == projection_onto(b, 0));
  CHECK(projection_onto(b, 1).apply(el(z.c, {5, 2})) == el(z.c, {2, 2}));
}

TEST_CASE("decomposition from projections round-trips") {
  Z12Square z;
  Decomposition b{"B", z.v, {z.x_axis, z.diagonal}};
  auto back = decomposition_from_projections(projection_family(b));
  REQUIRE(back.summands.size() == 2);
  CHECK(back.summands[0]->members() == z.x_axis->members());
  CHECK(back.summands[1]->members() == z.diagonal->members());
  CHECK(verify_direct_sum(back).proven());
}

TEST_CASE("a product larger than the target fails without enumeration") {
  Z12Square z;
  Decomposition d{"D", z.v, {z.v, z.v, z.v}};
  CHECK(verify_direct_sum(d, 1000).verdict == Verdict::fail);
}

TEST_CASE("subgroups of Z12 are the six d.Z12, matching an exhaustive filter") {
  auto c = Carrier::zmod(12);
  auto v = full_space(c, ProfileId::group_vs, zscalars_full(12, ScalarRole::additive_group));
  auto subs = enumerate_substructures(*v, SubstructureKind::subgroup);
  CHECK(subs.size() == 6);
  std::vector<MemberSet> brute;
  for (unsigned mask = 1; mask < (1u << 12); ++mask) {
    bool closed = true;
    for (unsigned a = 0; a < 12 && closed; ++a)
      for (unsigned b = 0; b < 12 && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> ((a + b) % 12) & 1)) closed = false;
    if (!closed) continue;
    std::vector<Code> codes;
    for (unsigned a = 0; a < 12; ++a)
      if (mask >> a & 1) codes.push_back(a);
    brute.push_back(MemberSet::from_codes(c, codes));
  }
  CHECK(brute.size() == 6);
  for (const auto& m : brute) CHECK(std::find(subs.begin(), subs.end(), m) != subs.end());
  for (Code d : {1, 2, 3, 4, 6, 12}) {
    std::vector<Code> mult;
    for (Code x = 0; x < 12; x += d) mult.push_back(x);
    CHECK(std::find(subs.begin(), subs.end(), MemberSet::from_codes(c, mult)) != subs.end());
  }
}

TEST_CASE("Z7 has only the trivial subgroups") {
  auto v = full_space(Carrier::zmod(7), ProfileId::group_vs, zscalars_full(7, ScalarRole::additive_group));
  auto subs = enumerate_substructures(*v, SubstructureKind::subgroup);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].codes() == std::vector<Code>{0});
  CHECK(subs[1] == v->members());
}

TEST_CASE("subsemigroups of Z2 under +") {
  auto v = full_space(Carrier::zmod(2), ProfileId::semigroup_la, zscalars_full(2, ScalarRole::additive_semigroup));
  auto subs = enumerate_substructures(*v, SubstructureKind::subsemigroup);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].codes() == std::vector<Code>{0});
  CHECK(subs[1].codes() == std::vector<Code>{0, 1});
}

TEST_CASE("lattice enumeration on a small non-cyclic carrier") {
  auto c = Carrier::zmod_tuple(2, 2);
  auto v = full_space(c, ProfileId::group_vs, zscalars_full(2, ScalarRole::additive_group));
  CHECK(enumerate_substructures(*v, SubstructureKind::subgroup).size() == 5);
  auto big = full_space(Carrier::zmod_tuple(3, 4), ProfileId::group_vs, zscalars_full(3, ScalarRole::additive_group));
  CHECK(code_of([&] { enumerate_substructures(*big, SubstructureKind::subgroup); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("prime components over Z4 are strong simple but not doubly simple") {
  auto reg = load_fixture("prime_cyclic_over_z4.salg");
  auto v = classify_simplicity(reg.specials.at("V"));
  CHECK(v.level == SimplicityLevel::strong_simple);
  CHECK(v.simple);
  CHECK(v.strong_simple);
  CHECK_FALSE(v.doubly_simple);
  REQUIRE_FALSE(v.scalars.proper.empty());
  CHECK(v.scalars.proper.front().codes() == std::vector<Code>{0, 2});
}

TEST_CASE("mixed cyclic components over Z6 are simple but not strong simple") {
  auto s = zscalars_full(6, ScalarRole::additive_semigroup);
  std::vector<SpacePtr> comps;
  for (std::uint32_t n : {7u, 8u, 9u, 11u, 13u})
    comps.push_back(full_space(Carrier::zmod(n), ProfileId::semigroup_la, s, "Z" + std::to_string(n)));
  auto v = classify_simplicity(SpecialSpace("V", comps));
  CHECK(v.level == SimplicityLevel::simple);
  CHECK_FALSE(v.strong_simple);
  CHECK_FALSE(v.components[1].proper.empty());
  CHECK_FALSE(v.components[2].proper.empty());
  CHECK(v.components[0].proper.empty());
}

TEST_CASE("Z_p over Z_p is doubly simple") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto s = zscalars_full(p, ScalarRole::additive_group);
    auto v = classify_simplicity(SpecialSpace("V", {full_space(Carrier::zmod(p), ProfileId::group_la, s)}));
    CHECK(v.level == SimplicityLevel::doubly_simple);
    CHECK(v.scalars.kind == SubstructureKind::subgroup);
  }
}
