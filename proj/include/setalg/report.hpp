#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "setalg/carrier.hpp"

namespace setalg {

enum class Verdict { proven, sampled_pass, fail };

std::string_view to_string(Verdict v) noexcept;

/// One bound variable of a witness, e.g. s = 2.
struct Binding {
  std::string name;
  Element value;

  friend bool operator==(const Binding&, const Binding&) = default;
};

struct Violation {
  std::string axiom;
  std::vector<Binding> witness;
  /// Where the violation lives inside a composite structure, e.g. "component 2".
  std::string context;
  std::string detail;

  const Element* find(std::string_view name) const;
};

/// Verdict of a verification together with the least witness per violated axiom.
struct AxiomReport {
  Verdict verdict = Verdict::proven;
  std::vector<Violation> violations;
  std::uint64_t checked = 0;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;

  bool ok() const noexcept { return verdict != Verdict::fail; }
  bool proven() const noexcept { return verdict == Verdict::proven; }

  void add(Violation v);
  /// Marks a passing verdict as sampled (bounded fragment of an infinite carrier).
  void mark_sampled();
  /// Merges a sub-report; failure dominates, then sampled.
  void absorb(const AxiomReport& sub, const std::string& context = {});
};

}  // namespace setalg
