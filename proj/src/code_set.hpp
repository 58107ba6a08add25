#pragma once

#include <unordered_set>
#include <vector>

#include "setalg/carrier.hpp"

namespace setalg::internal {

// Carriers up to this size get a dense membership bitmap.
inline constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 28;

/// Set of codes of one carrier: a bitmap for moderate Z_n carriers, a hash
/// set otherwise.
class CodeSet {
 public:
  explicit CodeSet(const Carrier& c) {
    if (c.is_zmod() && c.cardinality() <= kDenseLimit) dense_.assign(static_cast<std::size_t>(c.cardinality()), false);
  }
  bool contains(Code x) const { return dense_.empty() ? sparse_.count(x) != 0 : dense_[x]; }
  bool insert(Code x) {
    if (dense_.empty()) return sparse_.insert(x).second;
    if (dense_[x]) return false;
    dense_[x] = true;
    return true;
  }

 private:
  std::vector<bool> dense_;
  std::unordered_set<Code> sparse_;
};

}  // namespace setalg::internal
