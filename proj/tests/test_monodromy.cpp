#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "secants/builtin_data.hpp"
#include "secants/certifier.hpp"
#include "secants/monodromy.hpp"
#include "secants/tracker.hpp"

using namespace secants;

namespace {

const StartSet& start_set() {
  static StartSet s = bootstrap_start_set();
  return s;
}

PermutationTen perm(const std::string& cycles) { return permutation_from_cycles(cycles); }

TriangleLoop builtin_loop(int which, const std::string& label) {
  return TriangleLoop{{start_set().base, data::loop_vertex(which, 1), data::loop_vertex(which, 2)},
                      label};
}

// plain breadth-first closure, independent of the Schreier-Sims order computation
std::uint64_t bfs_order(const std::vector<PermutationTen>& gens, std::size_t cap = 20000) {
  std::set<std::array<int, 10>> seen;
  std::deque<PermutationTen> queue;
  seen.insert(PermutationTen::identity().images);
  queue.push_back(PermutationTen::identity());
  while (!queue.empty()) {
    PermutationTen g = queue.front();
    queue.pop_front();
    for (const PermutationTen& h : gens) {
      PermutationTen gh = compose(g, h);
      if (seen.insert(gh.images).second) {
        REQUIRE(seen.size() <= cap);
        queue.push_back(gh);
      }
    }
  }
  return seen.size();
}

PermutationTen published(int which) {
  PermutationTen p;
  p.images = data::reference_loop_permutations()[std::size_t(which)];
  return p;
}

}  // namespace

TEST_CASE("composition acts right-to-left") {
  PermutationTen p = perm("(1 2 3)");
  PermutationTen q = perm("(2 3)");
  CHECK(compose(p, q) == perm("(1 2)"));
  CHECK(compose(PermutationTen::identity(), q) == q);
  CHECK(compose(q, PermutationTen::identity()) == q);
  CHECK(compose(p, inverse(p)) == PermutationTen::identity());
  CHECK(compose(inverse(p), p) == PermutationTen::identity());
}

TEST_CASE("cycle notation includes fixed points") {
  PermutationTen sigma1 = published(0);
  CHECK(cycle_notation(sigma1) == "(1)(2 6)(3 10 5)(4 8 9)(7)");
  CHECK(cycle_notation(PermutationTen::identity()) ==
        "(1)(2)(3)(4)(5)(6)(7)(8)(9)(10)");
}

TEST_CASE("cycle strings round-trip") {
  for (int which : {0, 1}) {
    PermutationTen sigma = published(which);
    CHECK(perm(cycle_notation(sigma)) == sigma);
  }
  CHECK(perm(cycle_notation(PermutationTen::identity())) == PermutationTen::identity());
  // commas are accepted as separators
  CHECK(perm("(1,2)(3,4)") == perm("(1 2)(3 4)"));
}

TEST_CASE("malformed cycle strings are rejected") {
  CHECK_THROWS_AS(perm("(1 2"), IOError);
  CHECK_THROWS_AS(perm("(0 1)"), IOError);
  CHECK_THROWS_AS(perm("(1 1)"), IOError);
  CHECK_THROWS_AS(perm("(11)"), IOError);
  CHECK_THROWS_AS(perm("(1 2)(2 3)"), IOError);

  PermutationTen broken;
  broken.images = {1, 1, 3, 4, 5, 6, 7, 8, 9, 10};
  CHECK_THROWS_AS(broken.validate(), Error);
}

TEST_CASE("the first reference permutation cubes to a transposition") {
  PermutationTen sigma1 = published(0);
  PermutationTen cube = compose(sigma1, compose(sigma1, sigma1));
  CHECK(cube == perm("(2 6)"));
  CHECK_FALSE(cube == PermutationTen::identity());
  for (int i : {3, 4, 5, 8, 9, 10}) CHECK(cube(i) == i);
}

TEST_CASE("group orders match a breadth-first closure on small groups") {
  const PermutationTen c10 = perm("(1 2 3 4 5 6 7 8 9 10)");
  struct Sample {
    std::vector<PermutationTen> gens;
    std::uint64_t order;
  };
  const std::vector<Sample> samples = {
      {{PermutationTen::identity()}, 1},
      {{perm("(1 2)")}, 2},
      {{c10}, 10},
      {{c10, perm("(2 10)(3 9)(4 8)(5 7)")}, 20},
      {{perm("(1 2)"), perm("(1 2 3 4)")}, 24},
      {{perm("(1 2)"), perm("(1 2 3 4 5)")}, 120},
      {{perm("(1 2)"), perm("(3 4 5)")}, 6},
  };
  for (const Sample& s : samples) {
    CHECK(group_order(s.gens) == s.order);
    CHECK(bfs_order(s.gens) == s.order);
  }
}

TEST_CASE("group orders of the large standard groups") {
  CHECK(group_order({perm("(1 2 3)"), perm("(2 3 4 5 6 7 8 9 10)")}) == 1814400ull);
  CHECK(group_order({perm("(1 2)"), perm("(1 2 3 4 5 6 7 8 9 10)")}) == 3628800ull);
  CHECK(group_order({published(0), published(1)}) == 3628800ull);
}

TEST_CASE("validating the first builtin loop reproduces its edge roots") {
  TriangleLoop loop = builtin_loop(1, "first");
  std::array<EdgeValidity, 3> edges = validate_loop(loop);
  for (int e = 0; e < 3; ++e) {
    const EdgeValidity& ev = edges[std::size_t(e)];
    CHECK(ev.from == e);
    CHECK(ev.to == (e + 1) % 3);
    CHECK_FALSE(ev.roots.advisory);
    const EdgeRootsResult two = edge_determinant_roots(loop.vertices[std::size_t(e)],
                                                       loop.vertices[std::size_t((e + 1) % 3)]);
    for (int r = 0; r < 3; ++r) {
      CHECK(std::abs(ev.roots.roots[std::size_t(r)] - two.roots[std::size_t(r)]) < 1e-10);
      CHECK(std::abs(ev.roots.roots[std::size_t(r)] -
                     data::loop_edge_roots(1)[std::size_t(e)][std::size_t(r)]) < 2e-4);
    }
  }
}

TEST_CASE("validating the second builtin loop reproduces its edge roots") {
  TriangleLoop loop = builtin_loop(2, "second");
  std::array<EdgeValidity, 3> edges = validate_loop(loop);
  for (int e = 0; e < 3; ++e) {
    const EdgeValidity& ev = edges[std::size_t(e)];
    for (int r = 0; r < 3; ++r)
      CHECK(std::abs(ev.roots.roots[std::size_t(r)] -
                     data::loop_edge_roots(2)[std::size_t(e)][std::size_t(r)]) < 2e-4);
  }

  // The first edge brushes the segment: one root sits about 1.6e-4 away
  // (near a = 0.9967), close enough to warrant the advisory but not a
  // crossing. The other two edges stay clear.
  CHECK(edges[0].roots.advisory);
  CHECK(edges[0].roots.min_segment_distance > 1e-5);
  CHECK(edges[0].roots.min_segment_distance < 1e-3);
  double graze = 1e9;
  for (const cplx& r : edges[0].roots.roots)
    graze = std::min(graze, std::abs(r - cplx(0.9967, -0.0002)));
  CHECK(graze < 5e-4);

  CHECK_FALSE(edges[1].roots.advisory);
  CHECK(edges[1].roots.min_segment_distance > 1e-3);
  CHECK_FALSE(edges[2].roots.advisory);
  CHECK(edges[2].roots.min_segment_distance > 1e-3);

  // the middle edge passes close to the segment without touching it
  double best = 1e9;
  for (const cplx& r : edges[1].roots.roots)
    best = std::min(best, std::abs(r - cplx(-0.0443, -0.0015)));
  CHECK(best < 5e-4);
}

TEST_CASE("a repeated vertex makes the determinant cubic degenerate") {
  TriangleLoop loop{{start_set().base, start_set().base, data::loop_vertex(1, 2)}, "bad"};
  CHECK_THROWS_AS(validate_loop(loop), DegenerateCubicError);
}

TEST_CASE("a constant loop induces the identity permutation") {
  TriangleLoop loop{{start_set().base, start_set().base, start_set().base}, "constant"};
  MonodromyRun run = track_loop(loop, start_set(), TrackerConfig::with_seed(7));
  REQUIRE(run.permutation.has_value());
  CHECK(*run.permutation == PermutationTen::identity());
  for (int i = 0; i < 10; ++i)
    CHECK(distance(run.final_points[std::size_t(i)], start_set().representatives[std::size_t(i)]) <
          1e-8);
}

TEST_CASE("tracking a loop and its reverse composes to the identity") {
  TriangleLoop fwd = builtin_loop(1, "fwd");
  TriangleLoop rev{{fwd.vertices[0], fwd.vertices[2], fwd.vertices[1]}, "rev"};
  MonodromyRun a = track_loop(fwd, start_set(), TrackerConfig::with_seed(7));
  MonodromyRun b = track_loop(rev, start_set(), TrackerConfig::with_seed(7));
  REQUIRE(a.permutation.has_value());
  REQUIRE(b.permutation.has_value());
  CHECK(compose(*b.permutation, *a.permutation) == PermutationTen::identity());
}

TEST_CASE("every leg of a tracked loop lands on a certified zero") {
  TriangleLoop loop = builtin_loop(2, "second");
  MonodromyRun run = track_loop(loop, start_set(), TrackerConfig::with_seed(7));
  REQUIRE(run.permutation.has_value());
  run.permutation->validate();
  for (int orbit = 0; orbit < 10; ++orbit) {
    for (int edge = 0; edge < 3; ++edge) {
      const PathResult& leg = run.path_statuses[std::size_t(orbit * 3 + edge)];
      REQUIRE(leg.status == PathStatus::Converged);
      const ParameterMatrix& target = loop.vertices[std::size_t((edge + 1) % 3)];
      CHECK(alpha_test(target, leg.endpoint).certified);
    }
  }
}

TEST_CASE("loop tracking is deterministic") {
  TriangleLoop loop = builtin_loop(2, "second");
  MonodromyRun a = track_loop(loop, start_set(), TrackerConfig::with_seed(7));
  MonodromyRun b = track_loop(loop, start_set(), TrackerConfig::with_seed(7));
  REQUIRE(a.permutation.has_value());
  REQUIRE(b.permutation.has_value());
  CHECK(*a.permutation == *b.permutation);
  for (int i = 0; i < 10; ++i)
    CHECK(distance(a.final_points[std::size_t(i)], b.final_points[std::size_t(i)]) == 0.0);
}
