#include "latticeflaw/flaw_table.hpp"

#include <json.hpp>

#include <stdexcept>

namespace latticeflaw {

std::string to_string(Provenance provenance) {
  return provenance == Provenance::Oracle ? "oracle" : "formula";
}

const Int& FlawTable::count(long long k) const {
  if (k < 0 || k >= size()) {
    throw std::out_of_range("flaw table: k out of range");
  }
  return counts[static_cast<std::size_t>(k)];
}

Int FlawTable::diff(long long k) const {
  if (k < 0 || k + 1 >= size()) {
    throw std::out_of_range("flaw table: diff index out of range");
  }
  return counts[static_cast<std::size_t>(k)] -
         counts[static_cast<std::size_t>(k) + 1];
}

Int FlawTable::total() const {
  Int sum = 0;
  for (const Int& c : counts) sum += c;
  return sum;
}

std::string to_csv(const FlawTable& table) {
  std::string out = "k,count,diff\n";
  for (long long k = 0; k < table.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += to_string(table.count(k));
    out += ',';
    if (k + 1 < table.size()) out += to_string(table.diff(k));
    out += '\n';
  }
  return out;
}

std::string to_json(const FlawTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (long long k = 0; k < table.size(); ++k) {
    nlohmann::json row{{"k", k}, {"count", to_string(table.count(k))}};
    if (k + 1 < table.size()) {
      row["diff"] = to_string(table.diff(k));
    } else {
      row["diff"] = nullptr;
    }
    rows.push_back(row);
  }
  nlohmann::json j{
      {"spec",
       {{"a", table.spec.a}, {"b", table.spec.b}, {"g", table.spec.g}}},
      {"provenance", to_string(table.provenance)},
      {"rows", rows}};
  return j.dump();
}

std::string to_markdown(const FlawTable& table) {
  std::string out = "| k | N_k | diff |\n|---:|---:|---:|\n";
  for (long long k = 0; k < table.size(); ++k) {
    out += "| ";
    out += std::to_string(k);
    out += " | ";
    out += to_string(table.count(k));
    out += " | ";
    if (k + 1 < table.size()) out += to_string(table.diff(k));
    out += " |\n";
  }
  return out;
}

}  // namespace latticeflaw
