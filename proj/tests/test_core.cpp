#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "latticeflaw/core.hpp"

using namespace latticeflaw;

namespace {

// Independent exhaustive generation, deliberately not using the library's
// enumerator: tests of the geometry should not lean on the module they
// feed into.
std::vector<LatticePath> all_paths(const BoundarySpec& spec) {
  std::vector<Step> steps(static_cast<std::size_t>(spec.total_steps()),
                          Step::North);
  std::fill_n(steps.begin(), static_cast<std::size_t>(spec.east_steps()),
              Step::East);
  std::vector<LatticePath> paths;
  do {
    paths.push_back(LatticePath(steps));
  } while (std::next_permutation(steps.begin(), steps.end()));
  return paths;
}

std::vector<std::pair<long long, long long>> coords(
    const std::vector<PathPoint>& points) {
  std::vector<std::pair<long long, long long>> out;
  for (const PathPoint& p : points) out.push_back({p.x, p.y});
  return out;
}

LatticePath random_path(std::mt19937& rng, const BoundarySpec& spec) {
  std::vector<Step> steps(static_cast<std::size_t>(spec.total_steps()),
                          Step::North);
  std::fill_n(steps.begin(), static_cast<std::size_t>(spec.east_steps()),
              Step::East);
  std::shuffle(steps.begin(), steps.end(), rng);
  return LatticePath(std::move(steps));
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(BoundarySpec(4, 3, 2));
  CHECK_THROWS_AS(BoundarySpec(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(BoundarySpec(6, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(BoundarySpec(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(BoundarySpec(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(BoundarySpec(1, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(BoundarySpec(1, 1, (1LL << 20) + 1), std::invalid_argument);

  BoundarySpec spec(4, 3, 2);
  CHECK(spec.east_steps() == 8);
  CHECK(spec.north_steps() == 6);
  CHECK(spec.total_steps() == 14);
  CHECK(spec.max_flaws() == 13);
  CHECK(spec.rescaled(5) == BoundarySpec(4, 3, 5));
}

TEST_CASE("parse and print") {
  LatticePath path = LatticePath::parse("ENNE");
  CHECK(path.size() == 4);
  CHECK(path.text() == "ENNE");
  CHECK(path.east_count() == 2);
  CHECK(path.north_count() == 2);
  CHECK(LatticePath::parse("").empty());
  CHECK_THROWS_AS(LatticePath::parse("ENX"), std::invalid_argument);
  CHECK_THROWS_AS(LatticePath::parse("en"), std::invalid_argument);
  CHECK_THROWS_AS(path.step(4), std::out_of_range);
  CHECK(path.step(1) == Step::North);
}

TEST_CASE("lexicographic path order puts east before north") {
  CHECK(LatticePath::parse("EEN") < LatticePath::parse("ENE"));
  CHECK(LatticePath::parse("ENE") < LatticePath::parse("NEE"));
  CHECK(LatticePath::parse("EN") == LatticePath::parse("EN"));
}

TEST_CASE("points and elevation") {
  BoundarySpec spec(4, 3, 2);
  LatticePath path = LatticePath::parse("NENEEEENNEEENN");
  CHECK(point_at(path, 0) == PathPoint{0, 0, 0});
  CHECK(point_at(path, 14) == PathPoint{8, 6, 14});
  CHECK(point_at(path, 2) == PathPoint{1, 1, 2});
  CHECK_THROWS_AS(point_at(path, 15), std::out_of_range);
  CHECK_THROWS_AS(point_at(path, -1), std::out_of_range);
  CHECK(path_points(path).size() == 15);

  CHECK(elevation(PathPoint{0, 0, 0}, spec) == 0);
  CHECK(elevation(PathPoint{8, 6, 14}, spec) == 0);
  CHECK(elevation(PathPoint{0, 1, 0}, spec) == 4);
  CHECK(elevation(PathPoint{1, 0, 0}, spec) == -3);

  BoundarySpec steep(3, 2, 4);
  CHECK(elevation(PathPoint{2, 1, 0}, steep) == -1);
  for (long long m = 0; m <= 4; ++m) {
    CHECK(elevation(PathPoint{3 * m, 2 * m, 0}, steep) == 0);
  }
}

TEST_CASE("flaw points of the running example") {
  BoundarySpec spec(4, 3, 2);
  LatticePath path = LatticePath::parse("NENEEEENNEEENN");
  auto flaws = flaw_points(path, spec);
  std::vector<std::pair<long long, long long>> expected{
      {0, 1}, {1, 1}, {1, 2}, {2, 2}, {5, 4}};
  CHECK(coords(flaws) == expected);
  CHECK(flaw_count(path, spec) == 5);
}

TEST_CASE("flaw extremes") {
  BoundarySpec spec(2, 1, 1);
  CHECK(flaw_count(LatticePath::parse("EEN"), spec) == 0);
  CHECK(flaw_count(LatticePath::parse("ENE"), spec) == 1);
  CHECK(flaw_count(LatticePath::parse("NEE"), spec) == 2);
  CHECK(flaw_count(LatticePath::parse("NEE"), spec) == spec.max_flaws());
  CHECK_THROWS_AS(flaw_count(LatticePath::parse("ENN"), spec),
                  std::invalid_argument);
  CHECK_THROWS_AS(flaw_count(LatticePath::parse("EN"), spec),
                  std::invalid_argument);
}

TEST_CASE("boundary points of the running example") {
  BoundarySpec spec(4, 3, 2);
  LatticePath path = LatticePath::parse("NENEEEENNEEENN");
  // The path crosses the line between lattice hits: only the endpoints
  // have elevation zero.
  auto contacts = boundary_points(path, spec);
  std::vector<std::pair<long long, long long>> expected{{0, 0}, {8, 6}};
  CHECK(coords(contacts) == expected);
  CHECK(interior_boundary_points(path, spec).empty());
  auto non_terminal = non_terminal_boundary_points(path, spec);
  REQUIRE(non_terminal.size() == 1);
  CHECK(non_terminal[0] == PathPoint{0, 0, 0});
}

TEST_CASE("boundary points with an interior contact") {
  BoundarySpec spec(3, 2, 3);
  LatticePath path = LatticePath::parse("EENNEEENNNENEEE");
  auto contacts = boundary_points(path, spec);
  std::vector<std::pair<long long, long long>> expected{
      {0, 0}, {3, 2}, {9, 6}};
  CHECK(coords(contacts) == expected);
  auto interior = interior_boundary_points(path, spec);
  REQUIRE(interior.size() == 1);
  CHECK(interior[0] == PathPoint{3, 2, 5});
  auto non_terminal = non_terminal_boundary_points(path, spec);
  REQUIRE(non_terminal.size() == 2);
  CHECK(non_terminal[1].index == 5);
  CHECK(flaw_count(path, spec) == 7);
}

TEST_CASE("highest points below and lowest points above") {
  BoundarySpec spec(3, 2, 3);
  LatticePath path = LatticePath::parse("EENNEEENNNENEEE");

  auto below = highest_points_below(path, spec);
  REQUIRE(below.has_value());
  CHECK(below->elevation == -1);
  std::vector<std::pair<long long, long long>> expected_below{{2, 1}, {5, 3}};
  CHECK(coords(below->points) == expected_below);
  CHECK(below->points[0].index == 3);
  CHECK(below->points[1].index == 8);

  auto above = lowest_points_above(path, spec);
  REQUIRE(above.has_value());
  CHECK(above->elevation == 2);
  std::vector<std::pair<long long, long long>> expected_above{
      {2, 2}, {5, 4}, {8, 6}};
  CHECK(coords(above->points) == expected_above);
  CHECK(above->points.back().index == 14);
}

TEST_CASE("extremal classes are empty on one-sided paths") {
  BoundarySpec spec(2, 1, 2);
  LatticePath low = LatticePath::parse("EEEENN");
  CHECK_FALSE(lowest_points_above(low, spec).has_value());
  auto below = highest_points_below(low, spec);
  REQUIRE(below.has_value());
  CHECK(below->elevation == -1);
  REQUIRE(below->points.size() == 1);
  CHECK(below->points[0] == PathPoint{1, 0, 1});

  LatticePath high = LatticePath::parse("NNEEEE");
  CHECK_FALSE(highest_points_below(high, spec).has_value());
  auto above = lowest_points_above(high, spec);
  REQUIRE(above.has_value());
  CHECK(above->elevation == 1);
  REQUIRE(above->points.size() == 1);
  CHECK(above->points[0] == PathPoint{3, 2, 5});
}

TEST_CASE("extremal class ranges and sizes") {
  for (BoundarySpec spec :
       {BoundarySpec(2, 1, 2), BoundarySpec(3, 2, 1), BoundarySpec(1, 1, 3),
        BoundarySpec(3, 2, 2)}) {
    long long closer = std::min(spec.a, spec.b);
    for (const LatticePath& path : all_paths(spec)) {
      auto below = highest_points_below(path, spec);
      if (below) {
        CHECK(below->elevation >= -closer);
        CHECK(below->elevation <= -1);
        CHECK(static_cast<long long>(below->points.size()) <= spec.g);
      }
      auto above = lowest_points_above(path, spec);
      if (above) {
        CHECK(above->elevation >= 1);
        CHECK(above->elevation <= closer);
        CHECK(static_cast<long long>(above->points.size()) <= spec.g);
      }
      CHECK(above.has_value() == (flaw_count(path, spec) > 0));
    }
  }
}

TEST_CASE("every path point is above, on, or below") {
  for (BoundarySpec spec :
       {BoundarySpec(2, 1, 2), BoundarySpec(3, 2, 1), BoundarySpec(1, 1, 3)}) {
    for (const LatticePath& path : all_paths(spec)) {
      long long above = flaw_count(path, spec);
      long long on = static_cast<long long>(boundary_points(path, spec).size());
      long long below = 0;
      for (const PathPoint& p : path_points(path)) {
        below += (elevation(p, spec) < 0);
      }
      CHECK(above + on + below == spec.total_steps() + 1);
      CHECK(above <= spec.max_flaws());
      CHECK(on >= 2);
    }
  }
}

TEST_CASE("concat and split round trip") {
  LatticePath path = LatticePath::parse("ENNEE");
  auto [left, right] = split(path, 2);
  CHECK(left.text() == "EN");
  CHECK(right.text() == "NEE");
  CHECK(concat(left, right) == path);

  auto [empty_left, all_right] = split(path, 0);
  CHECK(empty_left.empty());
  CHECK(all_right == path);
  auto [all_left, empty_right] = split(path, 5);
  CHECK(all_left == path);
  CHECK(empty_right.empty());
  CHECK_THROWS_AS(split(path, 6), std::out_of_range);
  CHECK_THROWS_AS(split(path, -1), std::out_of_range);

  SplitDecomposition three = split_at(path, 1, 3);
  REQUIRE(three.parts.size() == 3);
  CHECK(three.parts[0].text() == "E");
  CHECK(three.parts[1].text() == "NN");
  CHECK(three.parts[2].text() == "EE");
  CHECK(three.reassemble() == path);
  CHECK(three.split_indices == std::vector<long long>{1, 3});
  CHECK_THROWS_AS(split_at(path, 3, 1), std::out_of_range);

  SplitDecomposition two = split_at(path, 4);
  REQUIRE(two.parts.size() == 2);
  CHECK(two.reassemble() == path);
}

TEST_CASE("rotation reverses the step sequence") {
  CHECK(rotate180(LatticePath::parse("EN")).text() == "NE");
  CHECK(rotate180(LatticePath::parse("EEN")).text() == "NEE");
  CHECK(rotate180(LatticePath()).empty());

  std::mt19937 rng(20240816);
  BoundarySpec spec(3, 2, 2);
  for (int i = 0; i < 50; ++i) {
    LatticePath path = random_path(rng, spec);
    CHECK(rotate180(rotate180(path)) == path);
  }
}

TEST_CASE("rotation swaps the two extreme flaw classes") {
  BoundarySpec spec(2, 1, 2);
  LatticePath low = LatticePath::parse("EEEENN");
  CHECK(flaw_count(low, spec) == 0);
  CHECK(interior_boundary_points(low, spec).empty());
  LatticePath rotated = rotate180(low);
  CHECK(rotated.text() == "NNEEEE");
  CHECK(flaw_count(rotated, spec) == spec.max_flaws());

  // Pointwise: rotation negates the elevation profile.
  for (const LatticePath& path : all_paths(spec)) {
    LatticePath image = rotate180(path);
    auto original = path_points(path);
    auto mirrored = path_points(image);
    long long n = path.size();
    for (long long i = 0; i <= n; ++i) {
      CHECK(elevation(original[static_cast<std::size_t>(i)], spec) ==
            -elevation(mirrored[static_cast<std::size_t>(n - i)], spec));
    }
  }
}

TEST_CASE("sub-path elevations survive translation to the origin") {
  // Splitting at a boundary lattice point and treating the halves as
  // standalone paths preserves every elevation: the classifications of
  // the halves agree with the corresponding windows of the whole path.
  BoundarySpec spec(3, 2, 3);
  LatticePath path = LatticePath::parse("EENNEEENNNENEEE");
  auto contacts = interior_boundary_points(path, spec);
  REQUIRE(contacts.size() == 1);
  long long cut = contacts[0].index;  // lands on (3, 2), scale 1
  auto [head, tail] = split(path, cut);
  BoundarySpec head_spec = spec.rescaled(1);
  BoundarySpec tail_spec = spec.rescaled(2);
  auto whole = path_points(path);
  auto head_points = path_points(head);
  auto tail_points = path_points(tail);
  for (std::size_t i = 0; i < head_points.size(); ++i) {
    CHECK(elevation(head_points[i], head_spec) ==
          elevation(whole[i], spec));
  }
  for (std::size_t i = 0; i < tail_points.size(); ++i) {
    CHECK(elevation(tail_points[i], tail_spec) ==
          elevation(whole[static_cast<std::size_t>(cut) + i], spec));
  }
  CHECK(flaw_count(head, head_spec) + flaw_count(tail, tail_spec) ==
        flaw_count(path, spec));
}

TEST_CASE("cyclic swap at extremal points shifts the flaw count") {
  // Swapping the two halves of a path cut at a highest-point-below raises
  // the flaw count by the interior contact count plus one; cutting at a
  // lowest-point-above lowers it by the size of that class.
  for (BoundarySpec spec :
       {BoundarySpec(2, 1, 2), BoundarySpec(3, 2, 1), BoundarySpec(1, 1, 3)}) {
    for (const LatticePath& path : all_paths(spec)) {
      long long flaws = flaw_count(path, spec);
      long long interior =
          static_cast<long long>(interior_boundary_points(path, spec).size());
      if (auto below = highest_points_below(path, spec)) {
        for (const PathPoint& pivot : below->points) {
          auto [front, back] = split(path, pivot.index);
          CHECK(flaw_count(concat(back, front), spec) ==
                flaws + interior + 1);
        }
      }
      if (auto above = lowest_points_above(path, spec)) {
        long long class_size = static_cast<long long>(above->points.size());
        for (const PathPoint& pivot : above->points) {
          auto [front, back] = split(path, pivot.index);
          CHECK(flaw_count(concat(back, front), spec) == flaws - class_size);
        }
      }
    }
  }
}

TEST_CASE("json round trip") {
  BoundarySpec spec(3, 2, 4);
  LatticePath path = LatticePath::parse(
      "EEEENNENENNENNEENEEE");
  REQUIRE(is_member(path, spec));
  std::string text = path_to_json(path, spec);
  auto [parsed, parsed_spec] = path_from_json(text);
  CHECK(parsed == path);
  CHECK(parsed_spec == spec);

  CHECK_THROWS_AS(path_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(path_from_json("{\"steps\":\"EN\"}"), std::invalid_argument);
  CHECK_THROWS_AS(
      path_from_json(R"({"a":2,"b":2,"g":1,"steps":"ENEN"})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      path_from_json(R"({"a":2,"b":1,"g":1,"steps":"EN"})"),
      std::invalid_argument);
}
