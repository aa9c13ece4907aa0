#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takagi/errors.hpp"
#include "takagi/oracle.hpp"
#include "takagi/piecewise_linear.hpp"
#include "test_support.hpp"

using namespace takagi;
using namespace takagi::test;

namespace {

PiecewiseLinearFunction diagonal() {
  // single segment from (0,0) to (1,1)
  return PiecewiseLinearFunction(2, 0, Int(2), {Int(0), Int(1), Int(2)});
}

}  // namespace

TEST_CASE("flat graph counts one cell per column") {
  auto zero = PiecewiseLinearFunction::zero(2, 0);
  CHECK(pl_graph_mesh_count(zero, 3) == 8);
  CHECK(pl_graph_mesh_count(zero, 0) == 1);
  auto zero10 = PiecewiseLinearFunction::zero(10, 0);
  CHECK(pl_graph_mesh_count(zero10, 2) == 100);
}

TEST_CASE("diagonal segment under the half-open convention") {
  CHECK(pl_graph_mesh_count(diagonal(), 2) == 4);
  CHECK(pl_graph_mesh_count(diagonal(), 3) == 8);
}

TEST_CASE("first partial sum at matching scale") {
  auto H1 = build_partial_sum(classical(), 1);
  // columns: [0,1/2) stays in row 0; [1/2,1) starts at the peak (1/2,1/2)
  CHECK(pl_graph_mesh_count(H1, 1) == 3);
  auto walk = pl_graph_walk(H1, 1);
  auto cells = walk.cells();
  REQUIRE(cells.size() == 3);
  CHECK(cells[0] == std::pair<long long, long long>(0, 0));
  CHECK(cells[1] == std::pair<long long, long long>(1, 0));
  CHECK(cells[2] == std::pair<long long, long long>(1, 1));
}

TEST_CASE("walk is deterministic") {
  auto H4 = build_partial_sum(alternating_signal(), 4);
  auto a = pl_graph_walk(H4, 5);
  auto b = pl_graph_walk(H4, 5);
  CHECK(a.count == b.count);
  CHECK(a.cells() == b.cells());
}

TEST_CASE("cell budget is enforced") {
  auto H6 = build_partial_sum(classical(), 6);
  OracleLimits limits;
  limits.max_cells = 10;
  CHECK_THROWS_AS(pl_graph_mesh_count(H6, 6, {}, limits), ResourceError);
}

TEST_CASE("windowed walks clip exactly") {
  auto H2 = build_partial_sum(classical(), 2);
  // full count splits as the sum over the level-1 columns
  Int whole = pl_graph_mesh_count(H2, 3);
  Int left = pl_graph_mesh_count(H2, 3, MeshWindow{rat(0), rat(1, 2), false, rat(0), rat(0)});
  Int right = pl_graph_mesh_count(H2, 3, MeshWindow{rat(1, 2), rat(1), false, rat(0), rat(0)});
  CHECK(whole == left + right);

  // y-band below the graph top: the flat stretch at height 1/2 sits on a
  // grid line and belongs to the row above the band
  Int banded = pl_graph_mesh_count(H2, 2, MeshWindow::box(rat(0), rat(1), rat(0), rat(1, 4)));
  Int full = pl_graph_mesh_count(H2, 2);
  CHECK(banded < full);
}

TEST_CASE("per-column counts obey the oscillation bound") {
  CHECK(check_column_bound(PiecewiseLinearFunction::zero(2, 2), 4));
  CHECK(check_column_bound(diagonal(), 3));
  CHECK(check_column_bound(build_partial_sum(classical(), 4), 4));
  CHECK(check_column_bound(build_partial_sum(alternating_signal(), 5), 5));
  CHECK(check_column_bound(build_partial_sum(steep_geometric(), 6), 6));
  CHECK(check_column_bound(build_partial_sum(van_der_waerden(), 2), 2));
}

TEST_CASE("containment of exact graph points in the strip") {
  CHECK(dense_containment_check(classical(), 4, 2000));
  CHECK(dense_containment_check(alternating_signal(), 6, 2000));
  CHECK(dense_containment_check(seeded_signal(5), 5, 1000));
  // f equals its first partial sum: zero margin
  auto single = CoefficientSequence::explicit_list(2, {rat(1)}, Rational(0));
  CHECK(dense_containment_check(single, 1, 500));
}
