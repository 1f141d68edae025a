#include "latticeflaw/report.hpp"

#include <json.hpp>

namespace latticeflaw {

std::string to_text(const CheckReport& report) {
  std::string out;
  for (const CheckItem& item : report.items) {
    out += item.ok ? "PASS " : "FAIL ";
    out += item.name;
    if (!item.detail.empty()) {
      out += ": ";
      out += item.detail;
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const CheckReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckItem& item : report.items) {
    checks.push_back(
        {{"name", item.name}, {"ok", item.ok}, {"detail", item.detail}});
  }
  nlohmann::json j{{"ok", report.ok()}, {"checks", checks}};
  return j.dump();
}

}  // namespace latticeflaw
