#pragma once

#include <utility>
#include <vector>

#include "latticeflaw/core.hpp"
#include "latticeflaw/exact.hpp"
#include "latticeflaw/flaw_table.hpp"
#include "latticeflaw/report.hpp"

namespace latticeflaw {

// Closed-form counting. The flaw distribution is constant on blocks of
// a+b consecutive flaw counts; block_count(j, g) is the shared value of
// the j-th block, computed from specialized complete/elementary symmetric
// sums over integer partitions, which in turn are built from rational
// Catalan numbers. Everything is exact.

// An integer partition, stored as (part, multiplicity) pairs with parts
// strictly increasing. weight = sum of part*multiplicity.
class Partition {
 public:
  Partition() = default;  // the empty partition, weight 0

  // Parts in any order, each >= 1.
  static Partition from_parts(const std::vector<long long>& parts);

  const std::vector<std::pair<long long, long long>>& multiplicities() const {
    return mults_;
  }
  long long weight() const;
  long long length() const;  // number of parts, multiplicity included

  // "1^2 3^1" style, ascending parts; "empty" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::pair<long long, long long>> mults_;
};

// All partitions of g, ordered by decreasing largest part, then
// lexicographically. Throws std::invalid_argument above the cap: partition
// counts grow superpolynomially and 60 is far past every use here.
std::vector<Partition> partitions_of(long long g, long long cap = 60);

// Memoizing calculator for a fixed coprime slope (a, b). Not thread-safe;
// use one instance per worker.
class FormulaContext {
 public:
  FormulaContext(long long a, long long b);

  long long a() const { return a_; }
  long long b() const { return b_; }

  // Rational Catalan number binomial(i*(a+b), i*a) / (i*(a+b)), i >= 1.
  // Counts nothing by itself but i * value is always an integer.
  const Rat& rational_catalan(long long i);

  // Product over the partition of rational_catalan(part)^mult / mult!.
  Rat partition_product(const Partition& partition);

  // Sum of partition_product over all partitions of g. Integral (checked);
  // equals the number of flawless member paths of (a, b, g). Value 1 at
  // g = 0 by the empty-partition convention.
  const Int& complete_sum(long long g);

  // Same sum with sign (-1)^(g - length); the elementary companion of
  // complete_sum. Integral (checked); (-1)^(g+1) * value counts the
  // max-flaw member paths. Value 1 at g = 0.
  const Int& elementary_sum(long long g);

  // The shared path count over the j-th block of a+b consecutive flaw
  // counts, 0 <= j < g: alternating convolution
  // sum_{i=0..j} (-1)^i elementary_sum(i) complete_sum(g-i).
  Int block_count(long long j, long long g);

  // Number of member paths of (a, b, g) with exactly k flaws,
  // 0 <= k < g*(a+b).
  Int flawed_path_count(long long k, long long g);

 private:
  const Rat& require_integral(const Rat& value, const char* what) const;

  long long a_;
  long long b_;
  std::vector<Rat> catalan_memo_;       // index i, slot 0 unused
  std::vector<Int> complete_memo_;      // index g
  std::vector<Int> elementary_memo_;    // index g
};

// Convenience wrappers over a fresh context.
Int count_flawed(long long k, const BoundarySpec& spec);
FlawTable formula_flaw_table(const BoundarySpec& spec);

// Classical Catalan number C_n.
Int catalan_number(long long n);

// block_count specialized to slope (1, 1) via the Catalan convolution
// sum_{k=j+1..g} C_{k-j-1} C_{g-k+j}; an independent route used to
// cross-check block_count(j, g) at a = b = 1. Requires 0 <= j < g.
Int block_count_unit_slope(long long j, long long g);

// Checks block_count(j-1, g) - block_count(0, g-j) * block_count(j-1, j)
// == block_count(j, g) for every 0 < j < g, each side computed from the
// closed form independently. Requires g >= 2.
CheckReport recurrence_check(long long g, long long a, long long b);

// Checks sum_{i=0..g} (-1)^i elementary_sum(i) complete_sum(g-i) == 0 for
// the given g >= 1.
CheckReport alternating_identity_check(long long g, long long a, long long b);

}  // namespace latticeflaw
