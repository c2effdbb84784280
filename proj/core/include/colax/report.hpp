#pragma once

#include <string>
#include <vector>

namespace colax {

/// One verdict: which check, on which instance, pass/fail, and a witness on failure.
struct Verdict {
  std::string check;
  std::string instance;
  bool pass = true;
  std::string witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Report-valued operations never throw on a failed check; they collect verdicts here.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void fail(std::string check, std::string witness, std::string instance = {}) {
    verdicts_.push_back({std::move(check), std::move(instance), false, std::move(witness)});
  }
  void pass(std::string check, std::string instance = {}) {
    verdicts_.push_back({std::move(check), std::move(instance), true, {}});
  }
  void record(std::string check, std::string instance, bool ok, std::string witness = {}) {
    verdicts_.push_back({std::move(check), std::move(instance), ok, std::move(witness)});
  }
  void merge(const Report& other) {
    verdicts_.insert(verdicts_.end(), other.verdicts_.begin(), other.verdicts_.end());
  }

  [[nodiscard]] bool ok() const {
    for (const auto& v : verdicts_) {
      if (!v.pass) return false;
    }
    return true;
  }
  [[nodiscard]] std::vector<Verdict> failures() const {
    std::vector<Verdict> out;
    for (const auto& v : verdicts_) {
      if (!v.pass) out.push_back(v);
    }
    return out;
  }
  /// First failure's witness, or empty.
  [[nodiscard]] std::string first_witness() const {
    for (const auto& v : verdicts_) {
      if (!v.pass) return v.check + ": " + v.witness;
    }
    return {};
  }

  [[nodiscard]] const std::string& subject() const { return subject_; }
  [[nodiscard]] const std::vector<Verdict>& verdicts() const { return verdicts_; }

 private:
  std::string subject_;
  std::vector<Verdict> verdicts_;
};

}  // namespace colax
