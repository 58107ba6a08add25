#pragma once

#include <fstream>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "setalg/algebra.hpp"
#include "setalg/carrier.hpp"
#include "setalg/dsl.hpp"

namespace testing {

using namespace setalg;

inline std::string fixture_path(const std::string& rel) { return std::string(SALG_FIXTURES) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_fixture(const std::string& rel) { return read_file(fixture_path(rel)); }

inline dsl::Registry load_fixture(const std::string& rel, std::uint64_t enum_cap = dsl::kDefaultEnumCap) {
  return dsl::resolve(dsl::parse(read_fixture(rel)), dsl::ResolveOptions{enum_cap});
}

inline ScalarSetPtr zscalars(std::uint32_t n, std::vector<Code> codes, ScalarRole role = ScalarRole::plain_set) {
  return make_scalars("S", MemberSet::from_codes(Carrier::zmod(n), std::move(codes)), role);
}

inline ScalarSetPtr zscalars_full(std::uint32_t n, ScalarRole role = ScalarRole::plain_set) {
  return make_scalars("S", MemberSet::full(Carrier::zmod(n)), role);
}

inline SpacePtr space_of(const Carrier& c, std::vector<Code> codes, ProfileId p, ScalarSetPtr s,
                         std::string name = "V") {
  return make_space(std::move(name), MemberSet::from_codes(c, std::move(codes)), p, std::move(s));
}

inline SpacePtr full_space(const Carrier& c, ProfileId p, ScalarSetPtr s, std::string name = "V") {
  return make_space(std::move(name), MemberSet::full(c), p, std::move(s));
}

inline Element el(const Carrier& c, std::initializer_list<std::int64_t> e) { return Element::of(c, e); }

inline std::vector<Element> elements_of(const Carrier& c, std::initializer_list<Code> codes) {
  std::vector<Element> out;
  for (Code x : codes) out.emplace_back(c, x);
  return out;
}

inline std::vector<std::string> fixture_corpus() {
  std::vector<std::string> out;
  std::istringstream in(read_fixture("corpus.txt"));
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

}  // namespace testing
