#pragma once

#include <string>
#include <vector>

namespace latticeflaw {

// Result of one verification check. `detail` carries the counterexample or
// the checked quantity, never timing or other nondeterministic data.
struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool ok() const {
    for (const CheckItem& item : items) {
      if (!item.ok) return false;
    }
    return true;
  }

  void add(std::string name, bool ok, std::string detail = "") {
    items.push_back({std::move(name), ok, std::move(detail)});
  }

  void merge(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

// One line per item: "PASS name" or "FAIL name: detail".
std::string to_text(const CheckReport& report);

// {"ok": bool, "checks": [{"name","ok","detail"}...]}
std::string to_json(const CheckReport& report);

}  // namespace latticeflaw
