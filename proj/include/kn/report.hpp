#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace kn {

/// Outcome of one named check: how many cases were examined, how many
/// failed, and a bounded list of human-readable witnesses.
struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::string>> details;

  static constexpr std::size_t kMaxWitnesses = 8;

  bool passed() const { return violations == 0; }
  void fail(std::string witness) {
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
  }
  void expect(bool ok, const std::string& witness) {
    ++cases;
    if (!ok) fail(witness);
  }
  void note(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
  }
};

struct Report {
  std::string title;
  std::deque<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> info;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
  std::size_t passed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (c.passed()) ++n;
    return n;
  }
  CheckResult& add(std::string name) {
    checks.push_back(CheckResult{});
    checks.back().name = std::move(name);
    return checks.back();
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace kn
