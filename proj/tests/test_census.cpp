#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"

#include "cytk/census.hpp"

using namespace cytk;

TEST_CASE("parsing: comments, blanks, trailing tokens, and bad lines") {
  const auto r = parse_database(
      "# header\n"
      "\n"
      "1734 91 96 102 578\n"
      "120 3 7 20 40 50  ; note\n"
      "12 1 2\n"
      "abc\n"
      "10 1 1 1 -2\n");
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].degree == 1734);
  CHECK(r.records[0].weights == std::vector<Integer>{91, 96, 102, 578});
  CHECK(r.records[0].source_line == 3);
  CHECK(r.records[1].weights.size() == 5);
  REQUIRE(r.failures.size() == 3);
  CHECK(r.failures[0].line == 5);
  CHECK(r.failures[1].line == 6);
  CHECK(r.failures[2].line == 7);
}

TEST_CASE("normalization appends d/2 to four-weight records") {
  const auto n = normalize({1734, {91, 96, 102, 578}, 1});
  CHECK(n.ws.weights() == std::array<Integer, 5>{91, 96, 102, 578, 867});
  CHECK(n.origin == Origin::N3);
  const auto m = normalize({120, {3, 7, 20, 40, 50}, 2});
  CHECK(m.ws.weights() == std::array<Integer, 5>{3, 7, 20, 40, 50});
  CHECK(m.origin == Origin::N4);
  CHECK(normalize({10, {1, 1, 1, 2}, 3}).ws.weights() == std::array<Integer, 5>{1, 1, 1, 2, 5});
  CHECK_THROWS_AS(normalize({11, {1, 1, 1, 2}, 4}), NormalizationError);
  CHECK_THROWS_AS(normalize({12, {1, 1, 1, 2, 3}, 5}), NormalizationError);
  CHECK_THROWS_AS(normalize({10, {1, 1, 5, 3}, 6}), NormalizationError);
}

TEST_CASE("denormalize inverts normalize") {
  const auto parsed = parse_database(corpus::synthetic_database(40));
  REQUIRE(parsed.failures.empty());
  std::set<std::pair<Integer, std::vector<Integer>>> seen;
  for (const auto& raw : parsed.records) {
    const auto n = normalize(raw);
    const auto back = denormalize(n);
    REQUIRE(back.degree == raw.degree);
    REQUIRE(back.weights == raw.weights);
    const auto& w = n.ws.weights();
    REQUIRE(seen.insert({n.ws.degree(), {w.begin(), w.end()}}).second);
  }
}

TEST_CASE("the three-record sample") {
  std::istringstream in(
      "5 1 1 1 1 1\n"
      "120 3 7 20 40 50\n"
      "1734 91 96 102 578\n");
  const auto r = run_census(in);
  CHECK(r.summary.total == 3);
  CHECK(r.summary.not_smooth_codim2 == 2);
  CHECK(r.summary.not_smooth_codim2_and_no_edge == 2);
  CHECK(r.summary.failures.empty());
  REQUIRE(r.verdicts.size() == 3);
  CHECK(r.verdicts[0].smooth_in_codim2 == true);
  CHECK(r.verdicts[2].origin == Origin::N3);
}

TEST_CASE("empty input gives an all-zero summary") {
  std::istringstream in("");
  const auto r = run_census(in);
  CHECK(r.summary.total == 0);
  CHECK(r.summary.not_smooth_codim2 == 0);
  CHECK(r.summary.not_smooth_codim2_and_no_edge == 0);
  CHECK(verdicts_csv(r) == "line,d,w0,w1,w2,w3,w4,wellformed,quasismooth,cy_degree,smooth_codim2,no_edge,curves\n");
}

TEST_CASE("failures are reported per line without aborting") {
  std::istringstream in(
      "5 1 1 1 1 1\n"
      "11 1 1 1 4 4\n"
      "7 1 1\n"
      "9 1 1 1 3\n");
  const auto r = run_census(in);
  CHECK(r.summary.total == 2);
  REQUIRE(r.summary.failures.size() == 3);
  CHECK(r.summary.failures[0] == LineFailure{2, "not quasismooth"});
  CHECK(r.summary.failures[1].line == 3);
  CHECK(r.summary.failures[2].line == 4);
}

TEST_CASE("row filters restrict the table but not the counts") {
  const std::string db = corpus::synthetic_database(50);
  std::istringstream a(db), b(db);
  CensusOptions all, filtered;
  filtered.rows = RowFilter::NotSmoothNoEdge;
  const auto ra = run_census(a, all);
  const auto rb = run_census(b, filtered);
  CHECK(ra.summary.total == rb.summary.total);
  CHECK(ra.summary.not_smooth_codim2_and_no_edge == rb.summary.not_smooth_codim2_and_no_edge);
  CHECK(rb.verdicts.size() == rb.summary.not_smooth_codim2_and_no_edge);
}

TEST_CASE("verdict tables are identical for 1 and 8 workers") {
  const std::string db = corpus::synthetic_database(60);
  std::istringstream a(db), b(db);
  CensusOptions one, eight;
  eight.jobs = 8;
  const auto ra = run_census(a, one);
  const auto rb = run_census(b, eight);
  CHECK(ra.summary.total > 500);
  CHECK(verdicts_csv(ra) == verdicts_csv(rb));
}
