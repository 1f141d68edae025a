#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "latticeflaw/enumeration.hpp"
#include "latticeflaw/formula.hpp"

using namespace latticeflaw;

TEST_CASE("path space sizes") {
  CHECK(path_space_size(BoundarySpec(1, 1, 1)) == 2);
  CHECK(path_space_size(BoundarySpec(2, 1, 1)) == 3);
  CHECK(path_space_size(BoundarySpec(3, 2, 4)) == 125970);
}

TEST_CASE("enumeration is lexicographic and complete") {
  auto tiny = enumerate_paths(BoundarySpec(1, 1, 1));
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0].text() == "EN");
  CHECK(tiny[1].text() == "NE");

  auto small = enumerate_paths(BoundarySpec(2, 1, 1));
  REQUIRE(small.size() == 3);
  CHECK(small[0].text() == "EEN");
  CHECK(small[1].text() == "ENE");
  CHECK(small[2].text() == "NEE");

  BoundarySpec spec(3, 2, 2);
  auto paths = enumerate_paths(spec);
  CHECK(make_int(static_cast<long long>(paths.size())) ==
        path_space_size(spec));
  CHECK(std::is_sorted(paths.begin(), paths.end()));
  CHECK(std::adjacent_find(paths.begin(), paths.end()) == paths.end());
  for (const LatticePath& path : paths) CHECK(is_member(path, spec));
}

TEST_CASE("streaming enumerator matches materialized list") {
  BoundarySpec spec(2, 1, 2);
  PathEnumerator enumerator(spec);
  std::vector<LatticePath> streamed;
  while (auto path = enumerator.next()) streamed.push_back(*path);
  CHECK(streamed == enumerate_paths(spec));
  CHECK_FALSE(enumerator.next().has_value());  // stays exhausted
}

TEST_CASE("cap rejects oversized spaces up front") {
  try {
    enumerate_paths(BoundarySpec(3, 2, 2), 10);
    FAIL("expected EnumerationCapExceeded");
  } catch (const EnumerationCapExceeded& e) {
    CHECK(e.path_count() == 210);
    CHECK(e.cap() == 10);
    CHECK(std::string(e.what()).find("210") != std::string::npos);
  }
  CHECK_NOTHROW(enumerate_paths(BoundarySpec(3, 2, 2), 210));
}

TEST_CASE("oracle tables for hand-checked spaces") {
  FlawTable tiny = oracle_flaw_table(BoundarySpec(1, 1, 1));
  CHECK(tiny.provenance == Provenance::Oracle);
  CHECK(tiny.counts == std::vector<Int>{1, 1});

  FlawTable small = oracle_flaw_table(BoundarySpec(2, 1, 2));
  CHECK(small.counts == std::vector<Int>{3, 3, 3, 2, 2, 2});
  CHECK(small.total() == 15);

  FlawTable diagonal = oracle_flaw_table(BoundarySpec(1, 1, 3));
  CHECK(diagonal.counts == std::vector<Int>{5, 5, 3, 3, 2, 2});
}

TEST_CASE("oracle agrees with the closed form") {
  for (BoundarySpec spec :
       {BoundarySpec(2, 1, 2), BoundarySpec(3, 2, 2), BoundarySpec(1, 1, 4),
        BoundarySpec(5, 2, 1)}) {
    CHECK(oracle_flaw_table(spec).counts == formula_flaw_table(spec).counts);
  }
}

TEST_CASE("parallel oracle equals serial oracle") {
  for (BoundarySpec spec :
       {BoundarySpec(3, 2, 2), BoundarySpec(2, 1, 3), BoundarySpec(1, 1, 1)}) {
    FlawTable serial = oracle_flaw_table(spec);
    for (int jobs : {2, 3, 8}) {
      FlawTable parallel =
          oracle_flaw_table(spec, OracleOptions{kDefaultEnumerationCap, jobs});
      CHECK(parallel.counts == serial.counts);
    }
  }
}

TEST_CASE("reducible witness on known paths") {
  BoundarySpec spec(3, 2, 4);
  LatticePath reducible =
      LatticePath::parse("EEEENNENEN" "NENNEENEEE");
  auto witness = reducible_witness(reducible, spec);
  REQUIRE(witness.has_value());
  CHECK(*witness == 2);
  CHECK(flaw_count(reducible, spec) == 9);
  CHECK(is_reducible(reducible, spec));

  BoundarySpec small(2, 1, 2);
  auto split_one = reducible_witness(LatticePath::parse("EENNEE"), small);
  REQUIRE(split_one.has_value());
  CHECK(*split_one == 1);
  CHECK_FALSE(reducible_witness(LatticePath::parse("ENENEE"), small));
  CHECK_FALSE(reducible_witness(LatticePath::parse("EEEENN"), small));
  CHECK_FALSE(reducible_witness(LatticePath::parse("NNEEEE"), small));

  // Single-scale paths never decompose.
  BoundarySpec unit(3, 2, 1);
  for (const LatticePath& path : enumerate_paths(unit)) {
    CHECK_FALSE(reducible_witness(path, unit).has_value());
  }

  CHECK_THROWS_AS(reducible_witness(LatticePath::parse("EN"), small),
                  std::invalid_argument);
}

TEST_CASE("reducible flaw counts are congruent to -1") {
  for (BoundarySpec spec : {BoundarySpec(2, 1, 2), BoundarySpec(3, 2, 2),
                            BoundarySpec(1, 1, 4)}) {
    for (const LatticePath& path : enumerate_paths(spec)) {
      if (is_reducible(path, spec)) {
        CHECK((flaw_count(path, spec) + 1) % (spec.a + spec.b) == 0);
      }
    }
  }
}

TEST_CASE("enumerate_reducible matches the witness filter") {
  for (BoundarySpec spec : {BoundarySpec(2, 1, 2), BoundarySpec(3, 2, 2),
                            BoundarySpec(1, 1, 4)}) {
    for (long long k = 0; k < spec.total_steps() - 1; ++k) {
      std::set<std::string> listed;
      for (const LatticePath& path : enumerate_reducible(spec, k)) {
        CHECK(is_member(path, spec));
        CHECK(flaw_count(path, spec) == k);
        listed.insert(path.text());
      }
      std::set<std::string> filtered;
      for (const LatticePath& path : enumerate_paths(spec)) {
        if (flaw_count(path, spec) == k && is_reducible(path, spec)) {
          filtered.insert(path.text());
        }
      }
      CHECK(listed == filtered);
    }
  }
}

TEST_CASE("reducible counts at block boundaries") {
  BoundarySpec small(2, 1, 2);
  auto only = enumerate_reducible(small, 2);
  REQUIRE(only.size() == 1);
  CHECK(only[0].text() == "EENNEE");

  BoundarySpec spec(3, 2, 4);
  CHECK(enumerate_reducible(spec, 3).empty());
  CHECK(enumerate_reducible(spec, 4).size() == 754);
  CHECK(enumerate_reducible(spec, 9).size() == 437);
  CHECK(enumerate_reducible(spec, 14).size() == 586);
  CHECK_THROWS_AS(enumerate_reducible(spec, 19), std::out_of_range);
  CHECK_THROWS_AS(enumerate_reducible(spec, -1), std::out_of_range);
}

TEST_CASE("counting verification suite passes on small spaces") {
  for (BoundarySpec spec :
       {BoundarySpec(2, 1, 2), BoundarySpec(3, 2, 2), BoundarySpec(1, 1, 3),
        BoundarySpec(5, 2, 1)}) {
    CheckReport report = verify_counting(spec);
    INFO(to_text(report));
    CHECK(report.ok());
  }
}

TEST_CASE("table serializations") {
  FlawTable tiny = oracle_flaw_table(BoundarySpec(1, 1, 1));
  CHECK(to_csv(tiny) == "k,count,diff\n0,1,0\n1,1,\n");
  CHECK(to_markdown(tiny) ==
        "| k | N_k | diff |\n|---:|---:|---:|\n| 0 | 1 | 0 |\n| 1 | 1 |  |\n");

  FlawTable small = formula_flaw_table(BoundarySpec(2, 1, 2));
  auto parsed = nlohmann::json::parse(to_json(small));
  CHECK(parsed["spec"]["a"] == 2);
  CHECK(parsed["spec"]["b"] == 1);
  CHECK(parsed["spec"]["g"] == 2);
  CHECK(parsed["provenance"] == "formula");
  REQUIRE(parsed["rows"].size() == 6);
  CHECK(parsed["rows"][0]["k"] == 0);
  CHECK(parsed["rows"][0]["count"] == "3");
  CHECK(parsed["rows"][2]["diff"] == "1");
  CHECK(parsed["rows"][5]["diff"].is_null());

  std::string csv = to_csv(oracle_flaw_table(BoundarySpec(2, 1, 2)));
  CHECK(csv.find("2,3,1\n") != std::string::npos);
  CHECK(csv.rfind("5,2,\n") == csv.size() - 5);
}

TEST_CASE("flaw table accessors check bounds") {
  FlawTable table = formula_flaw_table(BoundarySpec(2, 1, 2));
  CHECK(table.count(0) == 3);
  CHECK(table.diff(2) == 1);
  CHECK(table.diff(3) == 0);
  CHECK_THROWS_AS(table.count(6), std::out_of_range);
  CHECK_THROWS_AS(table.diff(5), std::out_of_range);
}
