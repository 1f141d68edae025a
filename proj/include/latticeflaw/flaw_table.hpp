#pragma once

#include <string>
#include <vector>

#include "latticeflaw/core.hpp"
#include "latticeflaw/exact.hpp"

namespace latticeflaw {

// How a table's counts were produced.
enum class Provenance { Oracle, Formula };

std::string to_string(Provenance provenance);

// counts[k] = number of member paths with exactly k flaws, for
// k = 0 .. g*(a+b)-1. The counts sum to binomial(g*(a+b), g*a).
struct FlawTable {
  BoundarySpec spec;
  Provenance provenance = Provenance::Oracle;
  std::vector<Int> counts;

  long long size() const { return static_cast<long long>(counts.size()); }
  const Int& count(long long k) const;
  // counts[k] - counts[k+1]; requires k < size-1.
  Int diff(long long k) const;
  Int total() const;
};

// CSV with header "k,count,diff"; the diff cell of the last row is empty.
std::string to_csv(const FlawTable& table);

// {"spec": {"a","b","g"}, "provenance": "...", "rows": [{"k", "count",
// "diff"}...]} with counts as decimal strings; the last diff is null.
std::string to_json(const FlawTable& table);

// Markdown table with columns k, N_k, diff.
std::string to_markdown(const FlawTable& table);

}  // namespace latticeflaw
