#include "dqwalk/errors.hpp"
#include "dqwalk/factorizer.hpp"
#include "dqwalk/graph.hpp"
#include "dqwalk/walks.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

using namespace dqw;

namespace {

double state_distance(const ArcState& a, const ArcState& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    s += std::norm(a.amplitudes[i] - b.amplitudes[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE_BEGIN("walks");

TEST_CASE("zero steps leave the state unchanged") {
  const FactorizationOutcome out = run_factorization(build_family("petersen", {}));
  const ArcState psi = make_uniform_state(out.space.arc_count());
  CHECK(state_distance(discrete_evolve(out.walk, psi, 0), psi) == 0.0);
  CHECK(state_distance(continuous_evolve(out.result, psi, 0), psi) == 0.0);
  CHECK(compare_evolutions(out.walk, out.result, psi, 0) == 0.0);
}

TEST_CASE("one Grover step on K_3 moves along the line digraph") {
  const FactorizationOutcome out = run_factorization(build_family("complete", {3}));
  const ArcState psi = make_single_arc_state(out.space.arc_count(), out.space.arc_index(0, 1));
  const ArcState next = discrete_evolve(out.walk, psi, 1);
  // Degree 2: weight 2/k = 1 on the non-reversal out-arc, 2/k - 1 = 0 on the
  // reversal.
  CHECK(std::abs(next.amplitudes[out.space.arc_index(1, 0)]) < 1e-15);
  CHECK(std::abs(next.amplitudes[out.space.arc_index(1, 2)] - 1.0) < 1e-15);
}

TEST_CASE("norm is preserved over long evolutions") {
  const FactorizationOutcome out = run_factorization(build_family("petersen", {}));
  const ArcState psi = make_single_arc_state(out.space.arc_count(), 0);
  CHECK(std::abs(discrete_evolve(out.walk, psi, 100).norm() - 1.0) < 1e-10);
  CHECK(std::abs(continuous_evolve(out.result, psi, 50).norm() - 1.0) < 1e-10);
}

TEST_CASE("continuous evolution is a semigroup") {
  const FactorizationOutcome out = run_factorization(build_family("petersen", {}));
  const ArcState psi = make_single_arc_state(out.space.arc_count(), 3);
  const ArcState once = continuous_evolve(out.result, psi, 7);
  const ArcState composed = continuous_evolve(out.result, continuous_evolve(out.result, psi, 3), 4);
  CHECK(state_distance(once, composed) < 1e-9);
}

TEST_CASE("discrete and continuous evolutions agree on even steps") {
  SUBCASE("K_3, one continuous unit equals two discrete steps") {
    const FactorizationOutcome out = run_factorization(build_family("complete", {3}));
    const ArcState psi = make_single_arc_state(out.space.arc_count(), 0);
    CHECK(state_distance(continuous_evolve(out.result, psi, 1),
                         discrete_evolve(out.walk, psi, 2)) < 1e-8);
  }
  SUBCASE("Petersen at m = 5") {
    const FactorizationOutcome out = run_factorization(build_family("petersen", {}));
    const ArcState psi = make_single_arc_state(out.space.arc_count(), 0);
    CHECK(state_distance(continuous_evolve(out.result, psi, 5),
                         discrete_evolve(out.walk, psi, 10)) < 1e-7);
  }
  SUBCASE("K_4 at m = 10 from the uniform state") {
    const FactorizationOutcome out = run_factorization(build_family("complete", {4}));
    const ArcState psi = make_uniform_state(out.space.arc_count());
    CHECK(compare_evolutions(out.walk, out.result, psi, 10) < 1e-7);
  }
  SUBCASE("Q_3 at m = 25 from a single arc") {
    const FactorizationOutcome out = run_factorization(build_family("hypercube", {3}));
    const ArcState psi = make_single_arc_state(out.space.arc_count(), 0);
    CHECK(compare_evolutions(out.walk, out.result, psi, 25) < 1e-7);
  }
  SUBCASE("the whole corpus agrees up to m = 10") {
    const std::vector<Graph> corpus = {
        build_family("complete", {3}), build_family("complete", {4}),
        build_family("complete", {5}), build_family("complete", {6}),
        build_family("cycle", {5}),    build_family("petersen", {}),
        build_family("hypercube", {3})};
    for (const Graph& g : corpus) {
      const FactorizationOutcome out = run_factorization(g);
      const ArcState psi = make_uniform_state(out.space.arc_count());
      for (int m : {1, 5, 10})
        CHECK(compare_evolutions(out.walk, out.result, psi, m) < 1e-7);
    }
  }
}

TEST_CASE("state constructors validate their inputs") {
  CHECK_THROWS_AS(make_single_arc_state(6, 6), ValidationError);
  CHECK_THROWS_AS(make_single_arc_state(6, -1), ValidationError);
  CHECK_THROWS_AS(make_uniform_state(0), ValidationError);
  const FactorizationOutcome out = run_factorization(build_family("complete", {3}));
  CHECK_THROWS_AS(discrete_evolve(out.walk, make_uniform_state(5), 1), ValidationError);
  CHECK_THROWS_AS(discrete_evolve(out.walk, make_uniform_state(6), -1), ValidationError);
}

TEST_SUITE_END();
