#pragma once

// Certification reports: an ordered list of named checks with status,
// backend, coverage and witnesses. Rendered as text or JSON.

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hopfkit {

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string backend;   // exact | modular(l) | sampled(k)
  std::string coverage;  // e.g. "63/63 indices"
  std::string detail;
  std::vector<std::string> witnesses;
  double seconds = 0.0;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string stage) : stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }
  std::vector<Check>& checks() { return checks_; }
  const std::vector<Check>& checks() const { return checks_; }

  Check& add(Check c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }
  Check& add(const std::string& name, bool ok, const std::string& detail = {}, const std::string& backend = "exact") {
    Check c;
    c.name = name;
    c.status = ok ? Status::Pass : Status::Fail;
    c.detail = detail;
    c.backend = backend;
    return add(std::move(c));
  }
  void skip(const std::string& name, const std::string& why) {
    Check c;
    c.name = name;
    c.status = Status::Skipped;
    c.detail = why;
    add(std::move(c));
  }
  void note(const std::string& line) { notes_.push_back(line); }
  const std::vector<std::string>& notes() const { return notes_; }

  void merge(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.checks_) {
      if (!prefix.empty()) c.name = prefix + "." + c.name;
      checks_.push_back(std::move(c));
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (c.status == Status::Fail) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string to_text() const {
    std::ostringstream os;
    if (!stage_.empty()) os << "== " << stage_ << " ==\n";
    for (const auto& c : checks_) {
      os << "[" << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP") << "] " << c.name;
      if (!c.backend.empty()) os << "  (" << c.backend;
      if (!c.coverage.empty()) os << ", " << c.coverage;
      if (!c.backend.empty()) os << ")";
      if (c.seconds > 0) os << "  " << fmt_seconds(c.seconds);
      if (!c.detail.empty()) os << "  " << c.detail;
      os << "\n";
      for (const auto& w : c.witnesses) os << "       witness: " << w << "\n";
    }
    for (const auto& n : notes_) os << "note: " << n << "\n";
    os << (ok() ? "result: PASS" : "result: FAIL") << "\n";
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["stage"] = stage_;
    j["ok"] = ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks_) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["status"] = status_name(c.status);
      jc["backend"] = c.backend;
      jc["coverage"] = c.coverage;
      jc["detail"] = c.detail;
      jc["witnesses"] = c.witnesses;
      jc["seconds"] = c.seconds;
      j["checks"].push_back(jc);
    }
    j["notes"] = notes_;
    return j;
  }

 private:
  static std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << "s";
    return os.str();
  }

  std::string stage_;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hopfkit
