#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace adelie {

// Outcome of one exhaustive or sampled verification sweep.
struct Report {
  static constexpr std::size_t kMaxListedViolations = 64;

  std::string name;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  // first kMaxListedViolations only
  bool sampled = false;

  explicit Report(std::string n = {}) : name(std::move(n)) {}

  bool ok() const { return violation_count == 0; }

  void fail(std::string what) {
    ++violation_count;
    if (violations.size() < kMaxListedViolations) violations.push_back(std::move(what));
  }

  // Folds another report's counts into this one, keeping the order stable.
  void absorb(const Report& other) {
    checked += other.checked;
    violation_count += other.violation_count;
    for (const auto& v : other.violations)
      if (violations.size() < kMaxListedViolations) violations.push_back(v);
    sampled = sampled || other.sampled;
  }
};


}  // namespace adelie
