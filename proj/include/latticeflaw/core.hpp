#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latticeflaw {

// Geometry of monotone lattice paths measured against the line b*x = a*y.
//
// A path lives in the grid rectangle [0, g*a] x [0, g*b] for a boundary
// spec (a, b, g) with coprime a, b. The elevation of a lattice point (x, y)
// is y*a - x*b: zero exactly on the boundary line, positive strictly above
// it, negative strictly below. A flaw of a path is a path point with
// positive elevation. Every definition below is stated in terms of
// elevation only, so translating a sub-path whose start lies on the
// boundary line (elevation 0) changes no classification: elevation is
// linear and vanishes on (m*a, m*b).

enum class Step : std::uint8_t { East = 0, North = 1 };

struct BoundarySpec {
  long long a = 1;
  long long b = 1;
  long long g = 1;

  // Requires 1 <= a, b, g <= 2^20 and gcd(a, b) = 1. The width bound keeps
  // every elevation within +-g*a*b < 2^62, so int64 arithmetic cannot
  // overflow anywhere downstream.
  BoundarySpec(long long a, long long b, long long g);

  long long east_steps() const { return g * a; }
  long long north_steps() const { return g * b; }
  long long total_steps() const { return g * (a + b); }
  // Largest attainable flaw count: every path point except the two
  // endpoints can be above the line, and no more.
  long long max_flaws() const { return total_steps() - 1; }

  // Same line, different length: used to analyze standalone sub-paths.
  BoundarySpec rescaled(long long new_g) const { return {a, b, new_g}; }

  friend bool operator==(const BoundarySpec&, const BoundarySpec&) = default;
};

struct PathPoint {
  long long x = 0;
  long long y = 0;
  // Position along the path: point index i follows the first i steps.
  long long index = 0;

  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  // Accepts exactly the characters 'E' and 'N'; throws
  // std::invalid_argument otherwise. The empty string is the empty path.
  static LatticePath parse(std::string_view text);

  long long size() const { return static_cast<long long>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  Step step(long long i) const;
  const std::vector<Step>& steps() const { return steps_; }

  long long east_count() const;
  long long north_count() const;

  std::string text() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  // Lexicographic with East < North, matching enumeration order.
  friend std::strong_ordering operator<=>(const LatticePath& lhs,
                                          const LatticePath& rhs) {
    return lhs.steps_ <=> rhs.steps_;
  }

 private:
  std::vector<Step> steps_;
};

LatticePath concat(const LatticePath& first, const LatticePath& second);
LatticePath concat(const LatticePath& first, const LatticePath& second,
                   const LatticePath& third);

// Splits before step index i (0 <= i <= size); first part has length i.
std::pair<LatticePath, LatticePath> split(const LatticePath& path,
                                          long long index);

// The path read backwards, i.e. the image under 180-degree rotation about
// the rectangle center. An involution; it negates the elevation profile,
// so it swaps "above" and "below" pointwise.
LatticePath rotate180(const LatticePath& path);

long long elevation(const PathPoint& point, const BoundarySpec& spec);

// Point reached after `index` steps; index in [0, size].
PathPoint point_at(const LatticePath& path, long long index);

// All size+1 points of the path in order.
std::vector<PathPoint> path_points(const LatticePath& path);

// Membership in the path family of `spec`: exactly g*a east and g*b north
// steps. Most operations below require it.
bool is_member(const LatticePath& path, const BoundarySpec& spec);
void require_member(const LatticePath& path, const BoundarySpec& spec);

// Path points strictly above the line, in path order.
std::vector<PathPoint> flaw_points(const LatticePath& path,
                                   const BoundarySpec& spec);
long long flaw_count(const LatticePath& path, const BoundarySpec& spec);

// Path points on the line, in path order. Both endpoints always qualify.
std::vector<PathPoint> boundary_points(const LatticePath& path,
                                       const BoundarySpec& spec);
// Boundary points excluding both endpoints.
std::vector<PathPoint> interior_boundary_points(const LatticePath& path,
                                                const BoundarySpec& spec);
// Boundary points excluding only the final endpoint (startpoint included).
std::vector<PathPoint> non_terminal_boundary_points(const LatticePath& path,
                                                    const BoundarySpec& spec);

// A maximal elevation class on one side of the line: the shared elevation
// and the points attaining it, in path order.
struct ElevationClass {
  long long elevation = 0;
  std::vector<PathPoint> points;
};

// Highest points below the line: the points of negative elevation closest
// to zero. Empty when the path never dips below. For a member path the
// elevation lies in {-min(a,b), ..., -1} and there are at most g points.
std::optional<ElevationClass> highest_points_below(const LatticePath& path,
                                                   const BoundarySpec& spec);

// Lowest points above the line, mirror image of the above: elevation in
// {1, ..., min(a,b)}, at most g points. Empty iff the path is flawless.
std::optional<ElevationClass> lowest_points_above(const LatticePath& path,
                                                  const BoundarySpec& spec);

// A path cut into consecutive segments; reassemble() restores the original.
struct SplitDecomposition {
  std::vector<LatticePath> parts;
  std::vector<long long> split_indices;

  LatticePath reassemble() const;
};

SplitDecomposition split_at(const LatticePath& path, long long i);
SplitDecomposition split_at(const LatticePath& path, long long i,
                            long long j);

// JSON round trip: {"a": .., "b": .., "g": .., "steps": "EEN..."}.
// Serialization requires membership; parsing validates it.
std::string path_to_json(const LatticePath& path, const BoundarySpec& spec);
std::pair<LatticePath, BoundarySpec> path_from_json(std::string_view text);

}  // namespace latticeflaw
