#include "latticeflaw/core.hpp"

#include <json.hpp>

#include <stdexcept>

#include "latticeflaw/exact.hpp"

namespace latticeflaw {

namespace {

constexpr long long kWidthLimit = 1LL << 20;

}  // namespace

BoundarySpec::BoundarySpec(long long a_in, long long b_in, long long g_in)
    : a(a_in), b(b_in), g(g_in) {
  if (a < 1 || b < 1 || g < 1) {
    throw std::invalid_argument("boundary spec: a, b, g must be positive");
  }
  if (a > kWidthLimit || b > kWidthLimit || g > kWidthLimit) {
    throw std::invalid_argument("boundary spec: a, b, g must each be <= 2^20");
  }
  if (gcd_ll(a, b) != 1) {
    throw std::invalid_argument("boundary spec: a and b must be coprime");
  }
}

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'E':
        steps.push_back(Step::East);
        break;
      case 'N':
        steps.push_back(Step::North);
        break;
      default:
        throw std::invalid_argument(std::string("path parse: invalid step '") +
                                    c + "', expected 'E' or 'N'");
    }
  }
  return LatticePath(std::move(steps));
}

Step LatticePath::step(long long i) const {
  if (i < 0 || i >= size()) {
    throw std::out_of_range("path step index out of range");
  }
  return steps_[static_cast<std::size_t>(i)];
}

long long LatticePath::east_count() const {
  long long count = 0;
  for (Step s : steps_) count += (s == Step::East);
  return count;
}

long long LatticePath::north_count() const {
  return size() - east_count();
}

std::string LatticePath::text() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::East ? 'E' : 'N');
  return out;
}

LatticePath concat(const LatticePath& first, const LatticePath& second) {
  std::vector<Step> steps;
  steps.reserve(first.steps().size() + second.steps().size());
  steps.insert(steps.end(), first.steps().begin(), first.steps().end());
  steps.insert(steps.end(), second.steps().begin(), second.steps().end());
  return LatticePath(std::move(steps));
}

LatticePath concat(const LatticePath& first, const LatticePath& second,
                   const LatticePath& third) {
  return concat(concat(first, second), third);
}

std::pair<LatticePath, LatticePath> split(const LatticePath& path,
                                          long long index) {
  if (index < 0 || index > path.size()) {
    throw std::out_of_range("path split index out of range");
  }
  const auto& steps = path.steps();
  auto mid = steps.begin() + static_cast<std::ptrdiff_t>(index);
  return {LatticePath(std::vector<Step>(steps.begin(), mid)),
          LatticePath(std::vector<Step>(mid, steps.end()))};
}

LatticePath rotate180(const LatticePath& path) {
  std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
  return LatticePath(std::move(steps));
}

long long elevation(const PathPoint& point, const BoundarySpec& spec) {
  return point.y * spec.a - point.x * spec.b;
}

PathPoint point_at(const LatticePath& path, long long index) {
  if (index < 0 || index > path.size()) {
    throw std::out_of_range("path point index out of range");
  }
  PathPoint p{0, 0, index};
  for (long long i = 0; i < index; ++i) {
    if (path.step(i) == Step::East) {
      ++p.x;
    } else {
      ++p.y;
    }
  }
  return p;
}

std::vector<PathPoint> path_points(const LatticePath& path) {
  std::vector<PathPoint> points;
  points.reserve(static_cast<std::size_t>(path.size()) + 1);
  PathPoint p{0, 0, 0};
  points.push_back(p);
  for (Step s : path.steps()) {
    if (s == Step::East) {
      ++p.x;
    } else {
      ++p.y;
    }
    ++p.index;
    points.push_back(p);
  }
  return points;
}

bool is_member(const LatticePath& path, const BoundarySpec& spec) {
  return path.size() == spec.total_steps() &&
         path.east_count() == spec.east_steps();
}

void require_member(const LatticePath& path, const BoundarySpec& spec) {
  if (!is_member(path, spec)) {
    throw std::invalid_argument(
        "path is not a member of the family: expected " +
        std::to_string(spec.east_steps()) + " east and " +
        std::to_string(spec.north_steps()) + " north steps");
  }
}

std::vector<PathPoint> flaw_points(const LatticePath& path,
                                   const BoundarySpec& spec) {
  require_member(path, spec);
  std::vector<PathPoint> flaws;
  for (const PathPoint& p : path_points(path)) {
    if (elevation(p, spec) > 0) flaws.push_back(p);
  }
  return flaws;
}

long long flaw_count(const LatticePath& path, const BoundarySpec& spec) {
  require_member(path, spec);
  long long count = 0;
  long long elev = 0;
  for (Step s : path.steps()) {
    elev += (s == Step::East) ? -spec.b : spec.a;
    count += (elev > 0);
  }
  return count;
}

std::vector<PathPoint> boundary_points(const LatticePath& path,
                                       const BoundarySpec& spec) {
  require_member(path, spec);
  std::vector<PathPoint> points;
  for (const PathPoint& p : path_points(path)) {
    if (elevation(p, spec) == 0) points.push_back(p);
  }
  return points;
}

std::vector<PathPoint> interior_boundary_points(const LatticePath& path,
                                                const BoundarySpec& spec) {
  std::vector<PathPoint> points = boundary_points(path, spec);
  // Endpoints are always on the line, so the list has length >= 2.
  points.pop_back();
  points.erase(points.begin());
  return points;
}

std::vector<PathPoint> non_terminal_boundary_points(const LatticePath& path,
                                                    const BoundarySpec& spec) {
  std::vector<PathPoint> points = boundary_points(path, spec);
  points.pop_back();
  return points;
}

namespace {

template <typename Keep>
std::optional<ElevationClass> extremal_class(const LatticePath& path,
                                             const BoundarySpec& spec,
                                             Keep keep, bool closer_is_greater) {
  require_member(path, spec);
  std::optional<long long> best;
  std::vector<PathPoint> points;
  for (const PathPoint& p : path_points(path)) {
    long long e = elevation(p, spec);
    if (!keep(e)) continue;
    if (!best || (closer_is_greater ? e > *best : e < *best)) {
      best = e;
      points.clear();
    }
    if (e == *best) points.push_back(p);
  }
  if (!best) return std::nullopt;
  return ElevationClass{*best, std::move(points)};
}

}  // namespace

std::optional<ElevationClass> highest_points_below(const LatticePath& path,
                                                   const BoundarySpec& spec) {
  return extremal_class(
      path, spec, [](long long e) { return e < 0; }, true);
}

std::optional<ElevationClass> lowest_points_above(const LatticePath& path,
                                                  const BoundarySpec& spec) {
  return extremal_class(
      path, spec, [](long long e) { return e > 0; }, false);
}

LatticePath SplitDecomposition::reassemble() const {
  LatticePath whole;
  for (const LatticePath& part : parts) whole = concat(whole, part);
  return whole;
}

SplitDecomposition split_at(const LatticePath& path, long long i) {
  auto [first, second] = split(path, i);
  return SplitDecomposition{{std::move(first), std::move(second)}, {i}};
}

SplitDecomposition split_at(const LatticePath& path, long long i,
                            long long j) {
  if (i > j) throw std::out_of_range("split indices must be nondecreasing");
  auto [first, rest] = split(path, i);
  auto [second, third] = split(rest, j - i);
  return SplitDecomposition{
      {std::move(first), std::move(second), std::move(third)}, {i, j}};
}

std::string path_to_json(const LatticePath& path, const BoundarySpec& spec) {
  require_member(path, spec);
  nlohmann::json j;
  j["a"] = spec.a;
  j["b"] = spec.b;
  j["g"] = spec.g;
  j["steps"] = path.text();
  return j.dump();
}

std::pair<LatticePath, BoundarySpec> path_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("path json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("steps") || !j.contains("a") ||
      !j.contains("b") || !j.contains("g")) {
    throw std::invalid_argument(
        "path json: expected object with keys steps, a, b, g");
  }
  BoundarySpec spec(j.at("a").get<long long>(), j.at("b").get<long long>(),
                    j.at("g").get<long long>());
  LatticePath path = LatticePath::parse(j.at("steps").get<std::string>());
  require_member(path, spec);
  return {std::move(path), spec};
}

}  // namespace latticeflaw
