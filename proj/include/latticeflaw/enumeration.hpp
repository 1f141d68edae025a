#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "latticeflaw/core.hpp"
#include "latticeflaw/exact.hpp"
#include "latticeflaw/flaw_table.hpp"
#include "latticeflaw/report.hpp"

namespace latticeflaw {

// Exhaustive enumeration over the full path family, used as the ground
// truth the closed-form module is checked against. Everything here is
// deterministic: paths are visited in lexicographic step order with
// East < North, and parallel histogram runs merge by addition, so the
// result is independent of scheduling.

inline constexpr long long kDefaultEnumerationCap = 100'000'000;

// Thrown before any enumeration whose path-space size exceeds the cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(Int path_count, long long cap);
  const Int& path_count() const { return path_count_; }
  long long cap() const { return cap_; }

 private:
  Int path_count_;
  long long cap_;
};

// binomial(g*(a+b), g*a): the number of member paths.
Int path_space_size(const BoundarySpec& spec);

// Streams the member paths of `spec` in lexicographic order.
class PathEnumerator {
 public:
  explicit PathEnumerator(const BoundarySpec& spec,
                          long long cap = kDefaultEnumerationCap);
  // The next path, or nullopt when exhausted.
  std::optional<LatticePath> next();

 private:
  std::vector<Step> current_;
  bool exhausted_ = false;
  bool first_ = true;
};

// All member paths in lexicographic order, materialized.
std::vector<LatticePath> enumerate_paths(const BoundarySpec& spec,
                                         long long cap = kDefaultEnumerationCap);

struct OracleOptions {
  long long cap = kDefaultEnumerationCap;
  // Worker threads; 1 = serial. Parallel runs partition the path space by
  // prefix and produce the identical table.
  int jobs = 1;
};

// Flaw histogram by exhaustive walk of every path.
FlawTable oracle_flaw_table(const BoundarySpec& spec,
                            const OracleOptions& options = {});

// A member path is reducible when it splits at a boundary lattice point
// into a nonempty flawless prefix and a nonempty max-flaw suffix. The
// witness is the scale j of the suffix (the suffix spans j*(a+b) steps),
// found by scanning j = g-1 down to 1; at most one j can work. Reducible
// paths have flaw count congruent to a+b-1 modulo a+b, and they are
// exactly the paths set aside by the flaw-raising rearrangement.
std::optional<long long> reducible_witness(const LatticePath& path,
                                           const BoundarySpec& spec);
bool is_reducible(const LatticePath& path, const BoundarySpec& spec);

// All reducible paths with exactly k flaws, ordered lexicographically by
// (prefix, suffix). Empty unless k = j*(a+b) - 1 for some 0 < j < g.
// Requires 0 <= k < g*(a+b) - 1.
std::vector<LatticePath> enumerate_reducible(
    const BoundarySpec& spec, long long k,
    long long cap = kDefaultEnumerationCap);

// Oracle-side verification: oracle/formula table agreement, the binomial
// total, constancy on blocks, strict decrease across blocks, the
// count identity |paths with k flaws| - |reducible with k flaws| =
// |paths with k+1 flaws|, the product form of the reducible count, and
// the rotation pairing between max-flaw paths and flawless paths with no
// interior boundary points.
CheckReport verify_counting(const BoundarySpec& spec,
                            const OracleOptions& options = {});

}  // namespace latticeflaw
