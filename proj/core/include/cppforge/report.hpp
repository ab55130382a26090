#ifndef CPPFORGE_REPORT_HPP
#define CPPFORGE_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cppforge/field.hpp"

namespace cppforge {

using Json = nlohmann::ordered_json;

enum class Verdict { kPass, kFail, kError, kNotApplicable };

std::string_view to_string(Verdict v);

struct Collision {
  Elem x1;
  Elem x2;
  Elem image;
};

struct Witness {
  std::optional<Collision> collision;
  std::string tag;
};

struct CrossCheck {
  std::string method;
  Verdict verdict = Verdict::kError;
};

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// "falsification": a proven claim failed on a concrete instance.
// "discrepancy": two routes that must agree did not.
struct Event {
  std::string kind;
  std::string detail;
};

/// Outcome of a single check. Fail verdicts always carry a witness.
struct VerificationReport {
  Verdict verdict = Verdict::kError;
  std::string method;
  std::optional<Witness> witness;
  std::optional<CrossCheck> cross_check;
  std::vector<NamedCheck> checks;
  std::vector<Event> events;
  double timing_ms = 0.0;

  bool passed() const { return verdict == Verdict::kPass; }
  bool has_event(std::string_view kind) const;

  static VerificationReport pass(std::string method);
  static VerificationReport fail(std::string method, Witness witness);
  static VerificationReport not_applicable(std::string method, std::string reason);
  static VerificationReport error(std::string method, std::string reason);
};

Json to_json(const Collision& c);
// timing_ms is written only when include_timing is set, so that reports of
// identical runs compare byte-for-byte.
Json to_json(const VerificationReport& r, bool include_timing = false);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cppforge

#endif  // CPPFORGE_REPORT_HPP
