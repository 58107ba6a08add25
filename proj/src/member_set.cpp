#include "setalg/member_set.hpp"

#include <algorithm>

#include "setalg/error.hpp"

namespace setalg {

MemberSet MemberSet::full(const Carrier& carrier) {
  MemberSet s;
  s.carrier_ = carrier;
  s.full_ = true;
  s.count_ = carrier.cardinality();
  return s;
}

MemberSet MemberSet::from_codes(const Carrier& carrier, std::vector<Code> codes) {
  MemberSet s;
  s.carrier_ = carrier;
  auto less = [&](Code a, Code b) { return carrier.less(a, b); };
  std::sort(codes.begin(), codes.end(), less);
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  if (carrier.is_zmod() && !codes.empty() && codes.size() == carrier.cardinality()) return full(carrier);
  s.codes_ = std::move(codes);
  return s;
}

MemberSet MemberSet::from_elements(const Carrier& carrier, const std::vector<Element>& elements) {
  std::vector<Code> codes;
  codes.reserve(elements.size());
  for (const auto& e : elements) {
    if (e.carrier() != carrier)
      fail(ErrorCode::incompatible_carrier, e.to_string() + " is not an element of " + carrier.name());
    codes.push_back(e.code());
  }
  return from_codes(carrier, std::move(codes));
}

bool MemberSet::contains(Code c) const noexcept { return index_of(c).has_value(); }

std::optional<std::size_t> MemberSet::index_of(Code c) const noexcept {
  if (full_) {
    if (c < count_) return static_cast<std::size_t>(c);
    return std::nullopt;
  }
  auto less = [&](Code a, Code b) { return carrier_.less(a, b); };
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c, less);
  if (it == codes_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

std::vector<Code> MemberSet::codes() const {
  if (!full_) return codes_;
  std::vector<Code> out(static_cast<std::size_t>(count_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<Element> MemberSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

bool MemberSet::subset_of(const MemberSet& other) const {
  if (carrier_ != other.carrier_) return false;
  if (other.full_) return true;
  if (size() > other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (!other.contains(at(i))) return false;
  return true;
}

MemberSet MemberSet::intersect(const MemberSet& other) const {
  if (carrier_ != other.carrier_)
    fail(ErrorCode::incompatible_carrier, "cannot intersect sets of different carriers");
  if (full_) return other;
  if (other.full_) return *this;
  std::vector<Code> out;
  for (const Code c : codes_)
    if (other.contains(c)) out.push_back(c);
  return from_codes(carrier_, std::move(out));
}

MemberSet MemberSet::with(Code c) const {
  if (contains(c)) return *this;
  auto v = codes();
  v.push_back(c);
  return from_codes(carrier_, std::move(v));
}

MemberSet MemberSet::without(Code c) const {
  auto v = codes();
  v.erase(std::remove(v.begin(), v.end(), c), v.end());
  return from_codes(carrier_, std::move(v));
}

bool operator==(const MemberSet& a, const MemberSet& b) {
  if (a.carrier_ != b.carrier_ || a.size() != b.size()) return false;
  if (a.full_ || b.full_) return a.full_ == b.full_;
  return a.codes_ == b.codes_;
}

}  // namespace setalg
