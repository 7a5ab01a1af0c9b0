#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gmicol/io.hpp"
#include "gmicol/oracle.hpp"

using namespace gmicol;

namespace {

RatVector vec(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

RatMatrix mat(int rows, int cols, std::initializer_list<long> xs) {
  RatMatrix m(rows, cols);
  auto it = xs.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(*it++);
  return m;
}

DualFormMIP box_instance() {
  DualFormMIP inst;
  inst.A = mat(2, 4, {2, 0, -1, 0, 0, 2, 0, -1});
  inst.b = vec({1, 1});
  inst.c = vec({3, 3, 0, 0});
  inst.int_set = {0, 1};
  return inst;
}

const char* box_text = R"({
  "name": "box",
  "A": [[2, 0, -1, 0], [0, 2, 0, -1]],
  "b": [1, 1],
  "c": [3, 3, 0, 0],
  "int_set": [1, 2]
})";

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumeration solves the box instance") {
  std::vector<RatVector> points;
  const OracleResult res = oracle_solve(box_instance(), std::nullopt, &points);
  REQUIRE(res.status == OracleStatus::Optimal);
  CHECK(*res.value == 2);
  CHECK(*res.witness == vec({1, 1}));

  // Feasible integer points are exactly {0,1}^2.
  CHECK(points.size() == 4);
  for (const RatVector& p : points) {
    CHECK((p[0] == 0 || p[0] == 1));
    CHECK((p[1] == 0 || p[1] == 1));
  }
}

TEST_CASE("enumeration detects a forced fractional coordinate") {
  DualFormMIP inst;
  inst.A = mat(1, 2, {2, -2});
  inst.b = vec({1});
  inst.c = vec({1, -1});
  inst.int_set = {0};
  const OracleResult res = oracle_solve(inst);
  CHECK(res.status == OracleStatus::Infeasible);
  CHECK_FALSE(res.value.has_value());
}

TEST_CASE("continuous coordinates are completed by an exact relaxation") {
  DualFormMIP inst = box_instance();
  inst.b = vec({1, 0});
  inst.int_set = {0};
  const OracleResult res = oracle_solve(inst);
  REQUIRE(res.status == OracleStatus::Optimal);
  CHECK(*res.value == 1);
  CHECK((*res.witness)[0] == 1);
  // The completion only fixes the objective; y2 may sit anywhere feasible.
  CHECK((*res.witness)[1] >= 0);
  CHECK((*res.witness)[1] <= Rational(3, 2));
}

TEST_CASE("derived ranges cover the region with outward rounding") {
  const std::vector<IntegerInterval> bounds = derive_bounds(box_instance());
  REQUIRE(bounds.size() == 2);
  for (const IntegerInterval& iv : bounds) {
    CHECK(iv.lo == 0);
    CHECK(iv.hi == 2);
  }
}

TEST_CASE("explicit ranges are honored verbatim") {
  std::vector<IntegerInterval> bounds(2);
  bounds[0] = {Integer(1), Integer(1)};
  bounds[1] = {Integer(0), Integer(0)};
  const OracleResult res = oracle_solve(box_instance(), bounds);
  REQUIRE(res.status == OracleStatus::Optimal);
  CHECK(*res.value == 1);
  CHECK(*res.witness == vec({1, 0}));
}

TEST_CASE("an unbounded region is refused with a direction certificate") {
  DualFormMIP inst;
  inst.A = mat(2, 1, {1, 0});
  inst.b = vec({1, 0});
  inst.c = vec({1});
  inst.int_set = {0};

  RatVector direction;
  CHECK_FALSE(region_bounded(inst, &direction));
  REQUIRE(direction.size() == 2);
  // The certificate is a nonzero recession direction of the region.
  CHECK((direction[0] != 0 || direction[1] != 0));
  for (int j = 0; j < inst.num_constraints(); ++j) {
    CHECK(dot(direction, inst.A.col(j)) <= 0);
  }

  CHECK_THROWS_AS(oracle_solve(inst), BoundsUnavailableError);
  std::vector<IntegerInterval> bounds(1);
  bounds[0] = {Integer(0), Integer(1)};
  CHECK_THROWS_AS(oracle_solve(inst, bounds), BoundsUnavailableError);
  CHECK(region_bounded(box_instance()));
}

TEST_CASE("relaxation outcomes distinguish what duality can certify") {
  const LpRelaxation opt = solve_lp_relaxation(box_instance());
  REQUIRE(opt.status == LpStatus::Optimal);
  CHECK(*opt.value == 3);
  CHECK(*opt.y == RatVector{Rational(3, 2), Rational(3, 2)});

  // Contradictory single-variable fences: provably empty.
  DualFormMIP empty;
  empty.A = mat(1, 2, {1, -1});
  empty.b = vec({1});
  empty.c = vec({-1, -1});
  empty.int_set = {0};
  CHECK(solve_lp_relaxation(empty).status == LpStatus::Infeasible);

  // A zero column with negative cost: empty region, but the certificate
  // cannot separate emptiness from unboundedness.
  DualFormMIP ambiguous;
  ambiguous.A = mat(1, 1, {0});
  ambiguous.b = vec({1});
  ambiguous.c = vec({-1});
  ambiguous.int_set = {0};
  CHECK(solve_lp_relaxation(ambiguous).status == LpStatus::InfeasibleOrUnbounded);
}

}  // TEST_SUITE

TEST_SUITE("io") {

TEST_CASE("instances parse from JSON with integer or string entries") {
  const InstanceFile inst = parse_instance_text(box_text);
  CHECK(inst.name == "box");
  CHECK(inst.mip.A == box_instance().A);
  CHECK(inst.mip.b == box_instance().b);
  CHECK(inst.mip.c == box_instance().c);
  CHECK(inst.mip.int_set == std::vector<int>{0, 1});
  CHECK_FALSE(inst.assume_integer_value);
  CHECK_FALSE(inst.oracle_bounds.has_value());

  const InstanceFile quoted = parse_instance_text(R"({
    "A": [["2", 0], [0, "2"]], "b": ["1", 1], "c": [3, "3"], "int_set": [1, 2]
  })");
  CHECK(quoted.mip.A(0, 0) == 2);
  CHECK(quoted.mip.b == vec({1, 1}));
}

TEST_CASE("optional fields round-trip through serialization") {
  InstanceFile inst;
  inst.name = "round-trip";
  inst.mip = box_instance();
  inst.assume_integer_value = true;
  std::vector<IntegerInterval> bounds(2);
  bounds[0] = {Integer(-2), Integer(5)};
  bounds[1] = {Integer(0), Integer(0)};
  inst.oracle_bounds = bounds;

  const InstanceFile back = parse_instance_text(serialize_instance(inst));
  CHECK(back.name == inst.name);
  CHECK(back.mip.A == inst.mip.A);
  CHECK(back.mip.b == inst.mip.b);
  CHECK(back.mip.c == inst.mip.c);
  CHECK(back.mip.int_set == inst.mip.int_set);
  CHECK(back.assume_integer_value);
  REQUIRE(back.oracle_bounds.has_value());
  CHECK((*back.oracle_bounds)[0].lo == -2);
  CHECK((*back.oracle_bounds)[0].hi == 5);

  // Serialization is stable after one round trip.
  CHECK(serialize_instance(back) == serialize_instance(inst));
}

TEST_CASE("entries beyond 64 bits serialize as strings") {
  InstanceFile inst;
  inst.mip = box_instance();
  inst.mip.b[0] = Rational(Integer("123456789012345678901234567890"));
  const std::string text = serialize_instance(inst);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  const InstanceFile back = parse_instance_text(text);
  CHECK(back.mip.b[0] == inst.mip.b[0]);
}

TEST_CASE("malformed instances are rejected with the field named") {
  CHECK_THROWS_AS(parse_instance_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance_text("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_instance_text(R"({"A": [[1]], "b": [1], "c": [1]})"),
                  ParseError);  // int_set missing
  CHECK_THROWS_AS(
      parse_instance_text(R"({"A": [[1], [1, 2]], "b": [1, 1], "c": [1], "int_set": [1]})"),
      ParseError);  // ragged rows
  CHECK_THROWS_AS(
      parse_instance_text(R"({"A": [[1]], "b": [1.5], "c": [1], "int_set": [1]})"),
      ValidationError);  // floats are not exact
  CHECK_THROWS_AS(
      parse_instance_text(R"({"A": [[1]], "b": ["1/2"], "c": [1], "int_set": [1]})"),
      ValidationError);  // fractional data
  CHECK_THROWS_AS(
      parse_instance_text(R"({"A": [[1]], "b": ["1/0"], "c": [1], "int_set": [1]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_instance_text(R"({"A": [[1]], "b": [1], "c": [1], "int_set": []})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_instance_text(R"({"A": [[1]], "b": [1], "c": [1], "int_set": [2]})"),
      ValidationError);  // out of range

  try {
    parse_instance_text(R"({"A": [[1]], "b": ["1/2"], "c": [1], "int_set": [1]})");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("b entry 1") != std::string::npos);
  }
}

TEST_CASE("solve command reports the optimum and exit code") {
  const CommandResult res = cmd_solve(box_text, {});
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"status\": \"optimal\"") != std::string::npos);
  CHECK(res.output.find("\"value\": \"2\"") != std::string::npos);
  CHECK(res.error.empty());
}

TEST_CASE("solve command surfaces parse failures on exit code 1") {
  const CommandResult res = cmd_solve("not json", {});
  CHECK(res.exit_code == 1);
  CHECK(res.output.empty());
  CHECK_FALSE(res.error.empty());
}

TEST_CASE("an uncertified objective is refused without the assumption flag") {
  // Weight on a continuous coordinate: the optimal value need not be
  // integral, so solving demands an explicit assertion.
  const std::string text = R"({
    "A": [[2, 0, -1, 0], [0, 2, 0, -1]],
    "b": [1, 2], "c": [3, 3, 0, 0], "int_set": [1]
  })";
  const CommandResult refused = cmd_solve(text, {});
  CHECK(refused.exit_code == 1);
  CHECK(refused.error.find("assume-integer-value") != std::string::npos);

  SolveCliOptions opts;
  opts.assume_integer_value = true;
  const CommandResult solved = cmd_solve(text, opts);
  CHECK(solved.exit_code == 0);
  CHECK(solved.output.find("\"value\": \"4\"") != std::string::npos);

  // The file can assert the hypothesis itself.
  const std::string asserted = R"({
    "A": [[2, 0, -1, 0], [0, 2, 0, -1]],
    "b": [1, 2], "c": [3, 3, 0, 0], "int_set": [1],
    "assume_integer_value": true
  })";
  CHECK(cmd_solve(asserted, {}).exit_code == 0);
}

TEST_CASE("a false integral-value assertion is refuted at the optimum") {
  const std::string text = R"({
    "A": [[2, 0, -1, 0], [0, 2, 0, -1]],
    "b": [1, 1], "c": [3, 3, 0, 0], "int_set": [1],
    "assume_integer_value": true
  })";
  const CommandResult res = cmd_solve(text, {});
  CHECK(res.exit_code == 1);
  CHECK(res.error.find("hypothesis") != std::string::npos);
}

TEST_CASE("boundedness verification rejects an open region") {
  const std::string text = R"({
    "A": [[1], [0]], "b": [1, 0], "c": [1], "int_set": [1]
  })";
  SolveCliOptions opts;
  opts.verify_bounded = true;
  const CommandResult res = cmd_solve(text, opts);
  CHECK(res.exit_code == 1);
  CHECK(res.error.find("unbounded") != std::string::npos);

  // Without the flag the missing basis reads as infeasibility.
  const CommandResult plain = cmd_solve(text, {});
  CHECK(plain.exit_code == 2);

  SolveCliOptions ok;
  ok.verify_bounded = true;
  CHECK(cmd_solve(box_text, ok).exit_code == 0);
}

TEST_CASE("lp and oracle commands mirror their library results") {
  const CommandResult lp = cmd_lp(box_text);
  CHECK(lp.exit_code == 0);
  CHECK(lp.output.find("\"value\": \"3\"") != std::string::npos);

  const CommandResult oracle = cmd_oracle(box_text, "");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output.find("\"value\": \"2\"") != std::string::npos);

  const CommandResult restricted = cmd_oracle(box_text, "[[1, 1], [0, 0]]");
  CHECK(restricted.exit_code == 0);
  CHECK(restricted.output.find("\"value\": \"1\"") != std::string::npos);

  CHECK(cmd_oracle(box_text, "[[1]]").exit_code == 1);
}

TEST_CASE("check command cross-validates and flags corrupted cuts") {
  const CommandResult res = cmd_check(box_text);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"passed\": true") != std::string::npos);

  const CommandResult corrupted = cmd_check(box_text, true);
  CHECK(corrupted.exit_code == 1);
  CHECK(corrupted.output.find("\"passed\": false") != std::string::npos);
  CHECK(corrupted.output.find("offending_iteration") != std::string::npos);
}

TEST_CASE("trace command streams one JSON record per line") {
  const CommandResult res = cmd_trace(box_text, {});
  CHECK(res.exit_code == 0);
  size_t pivots = 0;
  size_t iterations = 0;
  size_t reports = 0;
  std::istringstream lines(res.output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find("\"type\":\"pivot\"") != std::string::npos) ++pivots;
    if (line.find("\"type\":\"iteration\"") != std::string::npos) ++iterations;
    if (line.find("\"type\":\"report\"") != std::string::npos) ++reports;
  }
  CHECK(pivots == 3);
  CHECK(iterations == 3);
  CHECK(reports == 1);
  // The report is the final line.
  CHECK(res.output.rfind("\"type\":\"report\"") > res.output.rfind("\"type\":\"pivot\""));
}

}  // TEST_SUITE
