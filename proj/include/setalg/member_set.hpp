#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "setalg/carrier.hpp"

namespace setalg {

/// Finite, duplicate-free, canonically ordered set of elements of one carrier.
///
/// A set equal to a whole Z_n carrier is stored implicitly (codes 0..N-1), so
/// "all zmod_matrix(12,2,3)" costs nothing until iterated.
class MemberSet {
 public:
  MemberSet() = default;

  static MemberSet full(const Carrier& carrier);
  /// Sorts and removes duplicates.
  static MemberSet from_codes(const Carrier& carrier, std::vector<Code> codes);
  static MemberSet from_elements(const Carrier& carrier, const std::vector<Element>& elements);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return full_ ? static_cast<std::size_t>(count_) : codes_.size(); }
  bool empty() const noexcept { return size() == 0; }
  bool is_full() const noexcept { return full_; }

  Code at(std::size_t i) const noexcept { return full_ ? static_cast<Code>(i) : codes_[i]; }
  Element element(std::size_t i) const { return {carrier_, at(i)}; }
  bool contains(Code c) const noexcept;
  std::optional<std::size_t> index_of(Code c) const noexcept;

  std::vector<Code> codes() const;
  std::vector<Element> elements() const;

  bool subset_of(const MemberSet& other) const;
  MemberSet intersect(const MemberSet& other) const;
  MemberSet with(Code c) const;
  MemberSet without(Code c) const;

  /// Same carrier and same elements, whatever the storage.
  friend bool operator==(const MemberSet& a, const MemberSet& b);

  class Iterator {
   public:
    using value_type = Code;
    using difference_type = std::ptrdiff_t;
    Iterator() = default;
    Iterator(const MemberSet* set, std::size_t i) : set_(set), i_(i) {}
    Code operator*() const { return set_->at(i_); }
    Iterator& operator++() {
      ++i_;
      return *this;
    }
    Iterator operator++(int) {
      auto t = *this;
      ++i_;
      return t;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.i_ == b.i_; }

   private:
    const MemberSet* set_ = nullptr;
    std::size_t i_ = 0;
  };
  Iterator begin() const { return {this, 0}; }
  Iterator end() const { return {this, size()}; }

 private:
  Carrier carrier_;
  bool full_ = false;
  std::uint64_t count_ = 0;
  std::vector<Code> codes_;
};

}  // namespace setalg
