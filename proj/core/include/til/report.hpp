#pragma once

#include <string>
#include <utility>
#include <vector>

#include "til/third_party/json.hpp"

namespace til {

/// Outcome of a verification routine: a verdict, witnesses for every failed
/// expectation, and free-form details.
struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::vector<std::string> witnesses;
  nlohmann::json details = nlohmann::json::object();

  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}

  /// Records a failure when `ok` is false. Returns `ok`.
  bool expect(bool ok, const std::string& witness) {
    if (!ok) {
      pass = false;
      witnesses.push_back(witness);
    }
    return ok;
  }
  void merge(const Report& sub) {
    for (const auto& w : sub.witnesses) witnesses.push_back(sub.check + ": " + w);
    pass = pass && sub.pass;
  }

  nlohmann::json to_json() const {
    return {{"check", check},
            {"params", params},
            {"verdict", pass ? "pass" : "fail"},
            {"witnesses", witnesses},
            {"details", details}};
  }
};

}  // namespace til
