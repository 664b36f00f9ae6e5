/**
 * @file report.hpp
 * @brief Structured pass/fail reports for the identity-verification suites.
 *
 * A VerifyReport is a named list of checks; each check counts the instances
 * it examined and records a human-readable message per failing instance.
 * Reports serialize to JSON for the CLI `verify` subcommand.
 */

#pragma once

#include <cstdio>
#include <deque>
#include <string>
#include <vector>

namespace tlcomb {

struct VerifyCheck {
  std::string name;
  long long pairs = 0;  // number of instances examined
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

class VerifyReport {
 public:
  VerifyReport(std::string suite, std::string sys)
      : suite_(std::move(suite)), sys_(std::move(sys)) {}

  /// Returned reference stays valid across later add_check calls
  /// (checks_ is a deque, so push_back never relocates elements).
  VerifyCheck& add_check(const std::string& name) {
    checks_.push_back(VerifyCheck{name, 0, {}});
    return checks_.back();
  }

  /// Merges another report's checks into this one.
  void absorb(const VerifyReport& other) {
    for (const auto& c : other.checks_) checks_.push_back(c);
  }

  const std::string& suite() const { return suite_; }
  const std::string& sys() const { return sys_; }
  const std::deque<VerifyCheck>& checks() const { return checks_; }

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.passed()) return false;
    return true;
  }

  long long total_pairs() const {
    long long t = 0;
    for (const auto& c : checks_) t += c.pairs;
    return t;
  }

  std::string to_json() const {
    std::string out = "{\"suite\":" + quote(suite_) + ",\"sys\":" + quote(sys_) +
                      ",\"passed\":" + (passed() ? "true" : "false") +
                      ",\"checks\":[";
    for (std::size_t i = 0; i < checks_.size(); ++i) {
      const auto& c = checks_[i];
      if (i) out += ",";
      out += "{\"name\":" + quote(c.name) +
             ",\"pairs\":" + std::to_string(c.pairs) + ",\"failures\":[";
      for (std::size_t j = 0; j < c.failures.size(); ++j) {
        if (j) out += ",";
        out += quote(c.failures[j]);
      }
      out += "]}";
    }
    out += "]}";
    return out;
  }

 private:
  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
            out += buf;
          } else {
            out += ch;
          }
      }
    }
    out += "\"";
    return out;
  }

  std::string suite_;
  std::string sys_;
  std::deque<VerifyCheck> checks_;
};

}  // namespace tlcomb
