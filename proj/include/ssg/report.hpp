#pragma once

#include <string>
#include <vector>

namespace ssg {

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

// Ordered list of named checks; failing checks carry a printable witness.
class Report {
 public:
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.witness});
  }
  bool ok() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  bool passed(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return c.passed;
    return false;
  }
  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed) return &c;
    return nullptr;
  }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace ssg
