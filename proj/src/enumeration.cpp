#include "latticeflaw/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "latticeflaw/formula.hpp"

namespace latticeflaw {

EnumerationCapExceeded::EnumerationCapExceeded(Int path_count, long long cap)
    : std::runtime_error("path space size " + to_string(path_count) +
                         " exceeds enumeration cap " + std::to_string(cap)),
      path_count_(std::move(path_count)),
      cap_(cap) {}

Int path_space_size(const BoundarySpec& spec) {
  return binomial(spec.total_steps(), spec.east_steps());
}

namespace {

void check_cap(const BoundarySpec& spec, long long cap) {
  Int size = path_space_size(spec);
  if (size > make_int(cap)) throw EnumerationCapExceeded(std::move(size), cap);
}

std::vector<Step> first_path_steps(const BoundarySpec& spec) {
  // Lexicographically least member: all east steps, then all north steps.
  std::vector<Step> steps(static_cast<std::size_t>(spec.total_steps()),
                          Step::North);
  std::fill(steps.begin(),
            steps.begin() + static_cast<std::ptrdiff_t>(spec.east_steps()),
            Step::East);
  return steps;
}

long long walk_flaws(const std::vector<Step>& steps, long long start_elevation,
                     const BoundarySpec& spec) {
  long long elev = start_elevation;
  long long flaws = 0;
  for (Step s : steps) {
    elev += (s == Step::East) ? -spec.b : spec.a;
    flaws += (elev > 0);
  }
  return flaws;
}

}  // namespace

PathEnumerator::PathEnumerator(const BoundarySpec& spec, long long cap) {
  check_cap(spec, cap);
  current_ = first_path_steps(spec);
}

std::optional<LatticePath> PathEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (first_) {
    first_ = false;
  } else if (!std::next_permutation(current_.begin(), current_.end())) {
    exhausted_ = true;
    return std::nullopt;
  }
  return LatticePath(current_);
}

std::vector<LatticePath> enumerate_paths(const BoundarySpec& spec,
                                         long long cap) {
  PathEnumerator enumerator(spec, cap);
  std::vector<LatticePath> paths;
  while (auto path = enumerator.next()) paths.push_back(std::move(*path));
  return paths;
}

namespace {

std::vector<Int> oracle_counts_serial(const BoundarySpec& spec) {
  std::vector<Int> counts(static_cast<std::size_t>(spec.total_steps()));
  std::vector<Step> steps = first_path_steps(spec);
  do {
    long long flaws = walk_flaws(steps, 0, spec);
    counts[static_cast<std::size_t>(flaws)] += 1;
  } while (std::next_permutation(steps.begin(), steps.end()));
  return counts;
}

// Shortest list of path prefixes, in lexicographic order, that covers the
// whole space and has at least `want` entries (or is full-length).
std::vector<std::vector<Step>> partition_prefixes(const BoundarySpec& spec,
                                                  std::size_t want) {
  std::vector<std::vector<Step>> prefixes{{}};
  long long depth = 0;
  while (prefixes.size() < want && depth < spec.total_steps()) {
    ++depth;
    std::vector<std::vector<Step>> extended;
    extended.reserve(prefixes.size() * 2);
    for (const auto& prefix : prefixes) {
      long long east =
          static_cast<long long>(std::count(prefix.begin(), prefix.end(),
                                            Step::East));
      long long north = static_cast<long long>(prefix.size()) - east;
      if (east < spec.east_steps()) {
        auto with_east = prefix;
        with_east.push_back(Step::East);
        extended.push_back(std::move(with_east));
      }
      if (north < spec.north_steps()) {
        auto with_north = prefix;
        with_north.push_back(Step::North);
        extended.push_back(std::move(with_north));
      }
    }
    prefixes = std::move(extended);
  }
  return prefixes;
}

std::vector<Int> oracle_counts_parallel(const BoundarySpec& spec, int jobs) {
  auto prefixes =
      partition_prefixes(spec, static_cast<std::size_t>(jobs) * 4);
  std::atomic<std::size_t> next_prefix{0};
  std::vector<std::vector<Int>> partials(
      static_cast<std::size_t>(jobs),
      std::vector<Int>(static_cast<std::size_t>(spec.total_steps())));

  auto worker = [&](std::size_t worker_index) {
    std::vector<Int>& counts = partials[worker_index];
    for (;;) {
      std::size_t index = next_prefix.fetch_add(1);
      if (index >= prefixes.size()) break;
      const std::vector<Step>& prefix = prefixes[index];
      long long elev = 0;
      long long base_flaws = 0;
      long long east = 0;
      for (Step s : prefix) {
        if (s == Step::East) {
          ++east;
          elev -= spec.b;
        } else {
          elev += spec.a;
        }
        base_flaws += (elev > 0);
      }
      long long east_left = spec.east_steps() - east;
      long long north_left = spec.north_steps() -
                             (static_cast<long long>(prefix.size()) - east);
      std::vector<Step> suffix(
          static_cast<std::size_t>(east_left + north_left), Step::North);
      std::fill(suffix.begin(),
                suffix.begin() + static_cast<std::ptrdiff_t>(east_left),
                Step::East);
      do {
        long long flaws = base_flaws + walk_flaws(suffix, elev, spec);
        counts[static_cast<std::size_t>(flaws)] += 1;
      } while (std::next_permutation(suffix.begin(), suffix.end()));
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    threads.emplace_back(worker, static_cast<std::size_t>(t));
  }
  for (auto& thread : threads) thread.join();

  // Addition is commutative, so the merged table does not depend on how
  // prefixes were scheduled across workers.
  std::vector<Int> counts(static_cast<std::size_t>(spec.total_steps()));
  for (const auto& partial : partials) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += partial[k];
  }
  return counts;
}

}  // namespace

FlawTable oracle_flaw_table(const BoundarySpec& spec,
                            const OracleOptions& options) {
  check_cap(spec, options.cap);
  std::vector<Int> counts = options.jobs <= 1
                                ? oracle_counts_serial(spec)
                                : oracle_counts_parallel(spec, options.jobs);
  return FlawTable{spec, Provenance::Oracle, std::move(counts)};
}

std::optional<long long> reducible_witness(const LatticePath& path,
                                           const BoundarySpec& spec) {
  require_member(path, spec);
  const long long n = spec.total_steps();
  std::vector<long long> elev(static_cast<std::size_t>(n) + 1, 0);
  std::vector<long long> east(static_cast<std::size_t>(n) + 1, 0);
  for (long long i = 0; i < n; ++i) {
    bool is_east = path.step(i) == Step::East;
    elev[i + 1] = elev[i] + (is_east ? -spec.b : spec.a);
    east[i + 1] = east[i] + is_east;
  }
  for (long long j = spec.g - 1; j >= 1; --j) {
    long long m = spec.g - j;
    long long cut = m * (spec.a + spec.b);
    // The cut must land on the boundary lattice point (m*a, m*b).
    if (elev[cut] != 0 || east[cut] != m * spec.a) continue;
    bool prefix_flawless = true;
    for (long long t = 0; t <= cut && prefix_flawless; ++t) {
      prefix_flawless = elev[t] <= 0;
    }
    if (!prefix_flawless) continue;
    bool suffix_max = true;
    for (long long t = cut + 1; t < n && suffix_max; ++t) {
      suffix_max = elev[t] > 0;
    }
    if (suffix_max) return j;
  }
  return std::nullopt;
}

bool is_reducible(const LatticePath& path, const BoundarySpec& spec) {
  return reducible_witness(path, spec).has_value();
}

std::vector<LatticePath> enumerate_reducible(const BoundarySpec& spec,
                                             long long k, long long cap) {
  if (k < 0 || k >= spec.total_steps() - 1) {
    throw std::out_of_range("enumerate_reducible: need 0 <= k < g*(a+b)-1");
  }
  if ((k + 1) % (spec.a + spec.b) != 0) return {};
  long long j = (k + 1) / (spec.a + spec.b);
  if (j < 1 || j >= spec.g) return {};
  long long m = spec.g - j;

  BoundarySpec prefix_spec = spec.rescaled(m);
  BoundarySpec suffix_spec = spec.rescaled(j);
  std::vector<LatticePath> prefixes;
  for (const LatticePath& p : enumerate_paths(prefix_spec, cap)) {
    if (flaw_count(p, prefix_spec) == 0) prefixes.push_back(p);
  }
  std::vector<LatticePath> suffixes;
  for (const LatticePath& p : enumerate_paths(suffix_spec, cap)) {
    if (flaw_count(p, suffix_spec) == suffix_spec.max_flaws()) {
      suffixes.push_back(p);
    }
  }
  Int product = make_int(static_cast<long long>(prefixes.size())) *
                make_int(static_cast<long long>(suffixes.size()));
  if (product > make_int(cap)) {
    throw EnumerationCapExceeded(std::move(product), cap);
  }

  std::vector<LatticePath> out;
  out.reserve(prefixes.size() * suffixes.size());
  for (const LatticePath& prefix : prefixes) {
    for (const LatticePath& suffix : suffixes) {
      out.push_back(concat(prefix, suffix));
    }
  }
  return out;
}

CheckReport verify_counting(const BoundarySpec& spec,
                            const OracleOptions& options) {
  CheckReport report;
  FlawTable oracle = oracle_flaw_table(spec, options);
  FlawTable formula = formula_flaw_table(spec);

  {
    bool equal = oracle.counts == formula.counts;
    std::string detail;
    if (!equal) {
      for (long long k = 0; k < oracle.size(); ++k) {
        if (oracle.count(k) != formula.count(k)) {
          detail = "first mismatch at k=" + std::to_string(k) + ": oracle " +
                   to_string(oracle.count(k)) + ", formula " +
                   to_string(formula.count(k));
          break;
        }
      }
    }
    report.add("oracle and closed form agree", equal, detail);
  }

  Int expected_total = path_space_size(spec);
  report.add("counts sum to the path space size",
             oracle.total() == expected_total,
             to_string(oracle.total()) + " vs " + to_string(expected_total));

  {
    bool constant = true;
    std::string detail;
    for (long long j = 0; j < spec.g && constant; ++j) {
      long long base = j * (spec.a + spec.b);
      for (long long r = 1; r < spec.a + spec.b && constant; ++r) {
        if (oracle.count(base + r) != oracle.count(base)) {
          constant = false;
          detail = "block " + std::to_string(j) + " varies at k=" +
                   std::to_string(base + r);
        }
      }
    }
    report.add("counts constant on each block", constant, detail);

    bool decreasing = true;
    std::string decrease_detail;
    for (long long j = 1; j < spec.g && decreasing; ++j) {
      long long base = j * (spec.a + spec.b);
      if (oracle.count(base) >= oracle.count(base - 1)) {
        decreasing = false;
        decrease_detail = "block " + std::to_string(j) + " fails: " +
                          to_string(oracle.count(base)) + " >= " +
                          to_string(oracle.count(base - 1));
      }
    }
    report.add("block values strictly decrease", decreasing, decrease_detail);
  }

  // Second sweep: reducible counts per k, the rotation pairing sets, and
  // the congruence condition on reducible flaw counts.
  std::vector<Int> reducible_by_k(static_cast<std::size_t>(oracle.size()));
  std::vector<LatticePath> max_flaw_paths;
  std::vector<LatticePath> flawless_no_interior;
  bool congruence_ok = true;
  std::string congruence_detail;
  PathEnumerator enumerator(spec, options.cap);
  while (auto path = enumerator.next()) {
    long long k = flaw_count(*path, spec);
    if (is_reducible(*path, spec)) {
      reducible_by_k[static_cast<std::size_t>(k)] += 1;
      if ((k + 1) % (spec.a + spec.b) != 0 && congruence_ok) {
        congruence_ok = false;
        congruence_detail = "reducible path " + path->text() + " has " +
                            std::to_string(k) + " flaws";
      }
    }
    if (k == spec.max_flaws()) {
      max_flaw_paths.push_back(*path);
    } else if (k == 0 && interior_boundary_points(*path, spec).empty()) {
      flawless_no_interior.push_back(*path);
    }
  }
  report.add("reducible flaw counts are congruent to -1 mod a+b",
             congruence_ok, congruence_detail);

  {
    bool identity = true;
    std::string detail;
    for (long long k = 0; k + 1 < oracle.size() && identity; ++k) {
      Int lhs = oracle.count(k) - reducible_by_k[static_cast<std::size_t>(k)];
      if (lhs != oracle.count(k + 1)) {
        identity = false;
        detail = "k=" + std::to_string(k) + ": " + to_string(lhs) + " vs " +
                 to_string(oracle.count(k + 1));
      }
    }
    report.add("removing reducible paths steps the count down one block",
               identity, detail);
  }

  {
    FormulaContext context(spec.a, spec.b);
    bool product_ok = true;
    std::string detail;
    for (long long j = 1; j < spec.g && product_ok; ++j) {
      long long k = j * (spec.a + spec.b) - 1;
      Int expected = context.block_count(0, spec.g - j) *
                     context.block_count(j - 1, j);
      const Int& actual = reducible_by_k[static_cast<std::size_t>(k)];
      if (actual != expected) {
        product_ok = false;
        detail = "k=" + std::to_string(k) + ": counted " + to_string(actual) +
                 ", product form " + to_string(expected);
      }
      Int listed =
          make_int(static_cast<long long>(enumerate_reducible(spec, k).size()));
      if (product_ok && listed != actual) {
        product_ok = false;
        detail = "k=" + std::to_string(k) + ": filter found " +
                 to_string(actual) + ", direct product listing " +
                 to_string(listed);
      }
    }
    report.add("reducible counts match the product form", product_ok, detail);

    bool rotation_ok = true;
    std::string rotation_detail;
    for (const LatticePath& path : max_flaw_paths) {
      LatticePath rotated = rotate180(path);
      if (flaw_count(rotated, spec) != 0 ||
          !interior_boundary_points(rotated, spec).empty()) {
        rotation_ok = false;
        rotation_detail = "rotation of " + path.text() + " is not flawless "
                          "with empty interior";
        break;
      }
    }
    if (rotation_ok &&
        max_flaw_paths.size() != flawless_no_interior.size()) {
      rotation_ok = false;
      rotation_detail =
          std::to_string(max_flaw_paths.size()) + " max-flaw paths vs " +
          std::to_string(flawless_no_interior.size()) +
          " flawless paths with empty interior";
    }
    Int expected_extreme = context.elementary_sum(spec.g);
    if (spec.g % 2 == 0) expected_extreme = -expected_extreme;
    if (rotation_ok &&
        make_int(static_cast<long long>(max_flaw_paths.size())) !=
            expected_extreme) {
      rotation_ok = false;
      rotation_detail = "max-flaw count " +
                        std::to_string(max_flaw_paths.size()) +
                        " vs closed form " + to_string(expected_extreme);
    }
    report.add("rotation pairs extremes with boundary-avoiding flawless paths",
               rotation_ok, rotation_detail);
  }

  return report;
}

}  // namespace latticeflaw
