#pragma once
// Check reports. Every verification is empirical at a bounded degree and
// the report header says so; a report never proves a statement, it records
// that no counterexample exists below the bound.

#include <string>
#include <vector>

namespace okounkov {

struct CheckEntry {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string check;
  std::string model;
  std::string scope = "empirical verification at bounded degree; not a proof";
  bool passed = true;
  std::vector<CheckEntry> entries;

  void add(const std::string& label, bool ok, const std::string& detail = "") {
    entries.push_back({label, ok, detail});
    passed = passed && ok;
  }

  std::string text() const {
    std::string out = "[" + check + "] model=" + model + " -- " + scope + "\n";
    for (const auto& e : entries) {
      out += std::string("  ") + (e.passed ? "pass" : "FAIL") + "  " + e.label;
      if (!e.detail.empty()) out += "  (" + e.detail + ")";
      out += "\n";
    }
    out += std::string("  => ") + (passed ? "PASS" : "FAIL") + "\n";
    return out;
  }
};

}  // namespace okounkov
