#include "setalg/report.hpp"

namespace setalg {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::proven:
      return "proven";
    case Verdict::sampled_pass:
      return "sampled-pass";
    case Verdict::fail:
      return "fail";
  }
  return "fail";
}

const Element* Violation::find(std::string_view name) const {
  for (const auto& b : witness)
    if (b.name == name) return &b.value;
  return nullptr;
}

void AxiomReport::add(Violation v) {
  violations.push_back(std::move(v));
  verdict = Verdict::fail;
}

void AxiomReport::mark_sampled() {
  if (verdict == Verdict::proven) verdict = Verdict::sampled_pass;
}

void AxiomReport::absorb(const AxiomReport& sub, const std::string& context) {
  for (auto v : sub.violations) {
    if (!context.empty()) v.context = v.context.empty() ? context : context + ", " + v.context;
    violations.push_back(std::move(v));
  }
  for (const auto& w : sub.warnings) warnings.push_back(context.empty() ? w : context + ": " + w);
  for (const auto& n : sub.notes) notes.push_back(context.empty() ? n : context + ": " + n);
  checked += sub.checked;
  if (sub.verdict == Verdict::fail || !violations.empty())
    verdict = Verdict::fail;
  else if (sub.verdict == Verdict::sampled_pass)
    mark_sampled();
}

}  // namespace setalg
