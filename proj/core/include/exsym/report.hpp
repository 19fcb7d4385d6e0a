#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

namespace exsym {

/// One named condition. On failure `witness` holds the first offending basis
/// indices (0-based) and `detail` a human-readable description.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::deque<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(std::string_view name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
  }

  Check& add(std::string name) {
    checks.push_back(Check{std::move(name), true, {}, {}});
    return checks.back();
  }

  void append(const ValidationReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

inline void fail(Check& c, std::vector<std::size_t> witness, std::string detail) {
  if (!c.passed) return;  // keep the first witness
  c.passed = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
}

}  // namespace exsym
