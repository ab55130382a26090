#include "cppforge/report.hpp"

#include <algorithm>

namespace cppforge {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kError:
      return "error";
    case Verdict::kNotApplicable:
      return "not_applicable";
  }
  return "error";
}

bool VerificationReport::has_event(std::string_view kind) const {
  return std::any_of(events.begin(), events.end(), [&](const Event& e) { return e.kind == kind; });
}

VerificationReport VerificationReport::pass(std::string method) {
  VerificationReport r;
  r.verdict = Verdict::kPass;
  r.method = std::move(method);
  return r;
}

VerificationReport VerificationReport::fail(std::string method, Witness witness) {
  VerificationReport r;
  r.verdict = Verdict::kFail;
  r.method = std::move(method);
  r.witness = std::move(witness);
  return r;
}

VerificationReport VerificationReport::not_applicable(std::string method, std::string reason) {
  VerificationReport r;
  r.verdict = Verdict::kNotApplicable;
  r.method = std::move(method);
  r.witness = Witness{std::nullopt, std::move(reason)};
  return r;
}

VerificationReport VerificationReport::error(std::string method, std::string reason) {
  VerificationReport r;
  r.verdict = Verdict::kError;
  r.method = std::move(method);
  r.witness = Witness{std::nullopt, std::move(reason)};
  return r;
}

Json to_json(const Collision& c) {
  Json j;
  j["x1"] = c.x1.to_string();
  j["x2"] = c.x2.to_string();
  j["image"] = c.image.to_string();
  return j;
}

Json to_json(const VerificationReport& r, bool include_timing) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["method"] = r.method;
  if (r.witness) {
    Json w = Json::object();
    if (r.witness->collision) w["collision"] = to_json(*r.witness->collision);
    if (!r.witness->tag.empty()) w["tag"] = r.witness->tag;
    j["witness"] = std::move(w);
  }
  if (r.cross_check) {
    j["cross_check"] = {{"method", r.cross_check->method},
                        {"verdict", std::string(to_string(r.cross_check->verdict))}};
  }
  if (!r.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json cj{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
  }
  if (!r.events.empty()) {
    Json events = Json::array();
    for (const auto& e : r.events) events.push_back({{"kind", e.kind}, {"detail", e.detail}});
    j["events"] = std::move(events);
  }
  if (include_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

}  // namespace cppforge
