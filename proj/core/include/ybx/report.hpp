#ifndef YBX_REPORT_HPP
#define YBX_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

namespace ybx {

/// One named axiom check.  On failure, `witness` is the first basis index
/// (in lexicographic flat order) on which the two sides differ.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::optional<long> witness;
  std::string note;
};

class VerificationReport {
 public:
  void add(std::string name, bool pass, std::optional<long> witness = std::nullopt,
           std::string note = {}) {
    checks_.push_back({std::move(name), pass, witness, std::move(note)});
  }

  bool all_pass() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  const std::vector<CheckResult>& checks() const { return checks_; }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace ybx

#endif
