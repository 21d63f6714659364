#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hitchin3 {

/// One checked identity.  `required` entries must hold: if one fails the
/// computation is wrong.  Non-required entries record expected discrepancies.
struct VerificationEntry {
  std::string name;
  bool holds = false;
  bool required = true;
  std::string residual;  // rendered residual; empty when zero
  std::string note;
};

class VerificationLog {
 public:
  void record(std::string name, bool holds, std::string residual = {}, std::string note = {}) {
    entries_.push_back({std::move(name), holds, true, std::move(residual), std::move(note)});
  }
  void record_informational(std::string name, bool holds, std::string residual = {},
                            std::string note = {}) {
    entries_.push_back({std::move(name), holds, false, std::move(residual), std::move(note)});
  }
  void append(const VerificationLog& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  const std::vector<VerificationEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool all_required_hold() const {
    for (const auto& e : entries_)
      if (e.required && !e.holds) return false;
    return true;
  }

  const VerificationEntry* first_failure() const {
    for (const auto& e : entries_)
      if (e.required && !e.holds) return &e;
    return nullptr;
  }

  const VerificationEntry* find(const std::string& name) const {
    for (const auto& e : entries_)
      if (e.name == name) return &e;
    return nullptr;
  }

  void throw_if_violated() const {
    if (const auto* e = first_failure()) {
      throw Error(ErrorCode::IdentityViolated,
                  e->name + (e->residual.empty() ? "" : " (residual " + e->residual + ")"));
    }
  }

 private:
  std::vector<VerificationEntry> entries_;
};

}  // namespace hitchin3
