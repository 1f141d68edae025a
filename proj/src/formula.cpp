#include "latticeflaw/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace latticeflaw {

Partition Partition::from_parts(const std::vector<long long>& parts) {
  std::vector<long long> sorted = parts;
  std::sort(sorted.begin(), sorted.end());
  Partition result;
  for (long long part : sorted) {
    if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (!result.mults_.empty() && result.mults_.back().first == part) {
      ++result.mults_.back().second;
    } else {
      result.mults_.push_back({part, 1});
    }
  }
  return result;
}

long long Partition::weight() const {
  long long total = 0;
  for (auto [part, mult] : mults_) total += part * mult;
  return total;
}

long long Partition::length() const {
  long long total = 0;
  for (auto [part, mult] : mults_) total += mult;
  return total;
}

std::string Partition::to_string() const {
  if (mults_.empty()) return "empty";
  std::string out;
  for (auto [part, mult] : mults_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(part) + "^" + std::to_string(mult);
  }
  return out;
}

namespace {

void generate_partitions(long long remaining, long long max_part,
                         std::vector<long long>& current,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(current));
    return;
  }
  for (long long part = std::min(max_part, remaining); part >= 1; --part) {
    current.push_back(part);
    generate_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long long g, long long cap) {
  if (g < 0) throw std::invalid_argument("partitions_of: negative weight");
  if (g > cap) {
    throw std::invalid_argument("partitions_of: weight " + std::to_string(g) +
                                " exceeds cap " + std::to_string(cap));
  }
  std::vector<Partition> out;
  std::vector<long long> current;
  // g == 0 emits the single empty partition.
  generate_partitions(g, g, current, out);
  return out;
}

FormulaContext::FormulaContext(long long a, long long b) : a_(a), b_(b) {
  BoundarySpec check(a, b, 1);  // reuses positivity/coprimality validation
  (void)check;
}

const Rat& FormulaContext::rational_catalan(long long i) {
  if (i < 1) throw std::out_of_range("rational_catalan: index must be >= 1");
  auto slot = static_cast<std::size_t>(i);
  if (slot >= catalan_memo_.size()) catalan_memo_.resize(slot + 1);
  Rat& memo = catalan_memo_[slot];
  if (memo == 0) {
    memo = Rat(binomial(i * (a_ + b_), i * a_), make_int(i * (a_ + b_)));
    memo.canonicalize();
  }
  return memo;
}

Rat FormulaContext::partition_product(const Partition& partition) {
  Rat product = 1;
  for (auto [part, mult] : partition.multiplicities()) {
    product *= rat_pow(rational_catalan(part), mult);
    product /= Rat(factorial(mult));
  }
  return product;
}

const Rat& FormulaContext::require_integral(const Rat& value,
                                            const char* what) const {
  if (!is_integral(value)) {
    // A non-integral sum means the arithmetic itself is broken, not the
    // input: surface it as an internal consistency failure.
    throw std::logic_error(std::string(what) +
                           ": partition sum is not an integer: " +
                           to_string(value));
  }
  return value;
}

const Int& FormulaContext::complete_sum(long long g) {
  if (g < 0) throw std::out_of_range("complete_sum: negative index");
  auto slot = static_cast<std::size_t>(g);
  while (complete_memo_.size() <= slot) {
    long long next = static_cast<long long>(complete_memo_.size());
    if (next == 0) {
      complete_memo_.push_back(Int(1));
      continue;
    }
    Rat sum = 0;
    for (const Partition& partition : partitions_of(next)) {
      sum += partition_product(partition);
    }
    complete_memo_.push_back(
        to_integer(require_integral(sum, "complete_sum")));
  }
  return complete_memo_[slot];
}

const Int& FormulaContext::elementary_sum(long long g) {
  if (g < 0) throw std::out_of_range("elementary_sum: negative index");
  auto slot = static_cast<std::size_t>(g);
  while (elementary_memo_.size() <= slot) {
    long long next = static_cast<long long>(elementary_memo_.size());
    if (next == 0) {
      elementary_memo_.push_back(Int(1));
      continue;
    }
    Rat sum = 0;
    for (const Partition& partition : partitions_of(next)) {
      Rat term = partition_product(partition);
      if ((next - partition.length()) % 2 != 0) term = -term;
      sum += term;
    }
    elementary_memo_.push_back(
        to_integer(require_integral(sum, "elementary_sum")));
  }
  return elementary_memo_[slot];
}

Int FormulaContext::block_count(long long j, long long g) {
  if (g < 1) throw std::out_of_range("block_count: g must be >= 1");
  if (j < 0 || j >= g) throw std::out_of_range("block_count: need 0 <= j < g");
  Int sum = 0;
  for (long long i = 0; i <= j; ++i) {
    Int term = elementary_sum(i) * complete_sum(g - i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Int FormulaContext::flawed_path_count(long long k, long long g) {
  if (g < 1) throw std::out_of_range("flawed_path_count: g must be >= 1");
  if (k < 0 || k >= g * (a_ + b_)) {
    throw std::out_of_range("flawed_path_count: need 0 <= k < g*(a+b)");
  }
  return block_count(k / (a_ + b_), g);
}

Int count_flawed(long long k, const BoundarySpec& spec) {
  FormulaContext context(spec.a, spec.b);
  return context.flawed_path_count(k, spec.g);
}

FlawTable formula_flaw_table(const BoundarySpec& spec) {
  FormulaContext context(spec.a, spec.b);
  FlawTable table{spec, Provenance::Formula, {}};
  table.counts.reserve(static_cast<std::size_t>(spec.total_steps()));
  for (long long j = 0; j < spec.g; ++j) {
    Int value = context.block_count(j, spec.g);
    for (long long r = 0; r < spec.a + spec.b; ++r) {
      table.counts.push_back(value);
    }
  }
  return table;
}

Int catalan_number(long long n) {
  if (n < 0) throw std::out_of_range("catalan_number: negative index");
  Int numerator = binomial(2 * n, n);
  // binomial(2n, n) is divisible by n+1.
  return numerator / make_int(n + 1);
}

Int block_count_unit_slope(long long j, long long g) {
  if (g < 1) throw std::out_of_range("block_count_unit_slope: g must be >= 1");
  if (j < 0 || j >= g) {
    throw std::out_of_range("block_count_unit_slope: need 0 <= j < g");
  }
  Int sum = 0;
  for (long long k = j + 1; k <= g; ++k) {
    sum += catalan_number(k - j - 1) * catalan_number(g - k + j);
  }
  return sum;
}

CheckReport recurrence_check(long long g, long long a, long long b) {
  if (g < 2) throw std::invalid_argument("recurrence_check: g must be >= 2");
  FormulaContext context(a, b);
  CheckReport report;
  for (long long j = 1; j < g; ++j) {
    Int lhs = context.block_count(j - 1, g) -
              context.block_count(0, g - j) * context.block_count(j - 1, j);
    Int rhs = context.block_count(j, g);
    report.add("block recurrence j=" + std::to_string(j) +
                   " g=" + std::to_string(g),
               lhs == rhs, to_string(lhs) + " vs " + to_string(rhs));
  }
  return report;
}

CheckReport alternating_identity_check(long long g, long long a,
                                       long long b) {
  if (g < 1) {
    throw std::invalid_argument("alternating_identity_check: g must be >= 1");
  }
  FormulaContext context(a, b);
  Int sum = 0;
  for (long long i = 0; i <= g; ++i) {
    Int term = context.elementary_sum(i) * context.complete_sum(g - i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  CheckReport report;
  report.add("alternating identity g=" + std::to_string(g), sum == 0,
             "sum = " + to_string(sum));
  return report;
}

}  // namespace latticeflaw
