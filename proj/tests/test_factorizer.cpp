#include "dqwalk/arc_space.hpp"
#include "dqwalk/errors.hpp"
#include "dqwalk/factorizer.hpp"
#include "dqwalk/graph.hpp"
#include "dqwalk/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace dqw;

TEST_SUITE_BEGIN("factorizer");

TEST_CASE("grover walk entries") {
  SUBCASE("K_3: reversal entry vanishes at degree 2") {
    const ArcSpace space = build_arc_space(build_family("complete", {3}));
    const GroverWalk walk = grover_walk(space);
    const int a01 = space.arc_index(0, 1);
    CHECK(walk.transition(a01, space.arc_index(1, 0)) == doctest::Approx(0.0));
    CHECK(walk.transition(a01, space.arc_index(1, 2)) == doctest::Approx(1.0));
  }
  SUBCASE("Petersen: reversal entry is 2/3 - 1") {
    const ArcSpace space = build_arc_space(build_family("petersen", {}));
    const GroverWalk walk = grover_walk(space);
    const int a01 = space.arc_index(0, 1);
    CHECK(walk.transition(a01, space.arc_index(1, 0)) == doctest::Approx(2.0 / 3.0 - 1.0));
  }
  SUBCASE("orthogonality across the corpus") {
    for (const char* name : {"complete", "petersen", "hypercube"}) {
      const Graph g = name == std::string("complete")    ? build_family(name, {5})
                      : name == std::string("hypercube") ? build_family(name, {3})
                                                         : build_family(name, {});
      const GroverWalk walk = grover_walk(build_arc_space(g));
      const std::size_t arcs = walk.transition.rows();
      CHECK((walk.transition.transpose() * walk.transition - Matrix::identity(arcs)).frobenius() <
            1e-12);
    }
  }
  SUBCASE("degree 1 is refused") {
    CHECK_THROWS_AS(grover_walk(build_arc_space(build_family("complete", {2}))),
                    ValidationError);
  }
}

TEST_CASE("invertibility gate") {
  const Graph k3 = build_family("complete", {3});
  CHECK(invertibility_gate(k3, symmetric_eig(k3.adjacency.to_real())));
  const Graph c4 = build_family("cycle", {4});
  CHECK(!invertibility_gate(c4, symmetric_eig(c4.adjacency.to_real())));
  const Graph k33 = build_family("complete_bipartite", {3});
  CHECK(!invertibility_gate(k33, symmetric_eig(k33.adjacency.to_real())));
}

TEST_CASE("generator of K_3 is 4pi/(3 sqrt 3) times the line digraph skew") {
  const Graph g = build_family("complete", {3});
  const ArcSpace space = build_arc_space(g);
  const SpectralDecomposition dec = symmetric_eig(g.adjacency.to_real());
  const Generator gen = build_generator(dec, space);

  REQUIRE(gen.contributions.size() == 1);
  CHECK(gen.contributions[0].lambda == doctest::Approx(-1.0));
  CHECK(gen.contributions[0].theta == doctest::Approx(2.0 * M_PI / 3.0));
  const double expected = 4.0 * M_PI / (3.0 * std::sqrt(3.0));
  CHECK(gen.contributions[0].coefficient == doctest::Approx(expected).epsilon(1e-12));

  const Matrix skew_ld = distance_digraphs_bfs(space).skew[1].to_real();
  CHECK((gen.skew - expected * skew_ld).frobenius() < 1e-9);

  // The oracle fixes the sign: exp(t S(LD)) with the positive t hits U^2.
  const Matrix u = grover_walk(space).transition;
  CHECK((expm_skew(skew_ld, expected) - u * u).frobenius() < 1e-10);
  CHECK((gen.skew - generator_log_oracle(dec, space)).frobenius() < 1e-9);
}

TEST_CASE("generator of the 3-cube skips the -k eigenvalue") {
  const Graph g = build_family("hypercube", {3});
  const Generator gen = build_generator(symmetric_eig(g.adjacency.to_real()), build_arc_space(g));
  REQUIRE(gen.contributions.size() == 2);  // lambda = +1 and -1; +-3 excluded
  CHECK(gen.contributions[0].lambda == doctest::Approx(1.0));
  CHECK(gen.contributions[1].lambda == doctest::Approx(-1.0));
}

TEST_CASE("generator exponentiates to the squared walk on Petersen") {
  const Graph g = build_family("petersen", {});
  const ArcSpace space = build_arc_space(g);
  const Generator gen = build_generator(symmetric_eig(g.adjacency.to_real()), space);
  const Matrix u = grover_walk(space).transition;
  CHECK((expm_skew(gen.skew, 1.0) - u * u).frobenius() < 1e-9);
}

TEST_CASE("build_generator refuses singular adjacency") {
  const Graph c4 = build_family("cycle", {4});
  CHECK_THROWS_WITH_AS(build_generator(symmetric_eig(c4.adjacency.to_real()), build_arc_space(c4)),
                       doctest::Contains("singular"), ValidationError);
}

TEST_CASE("complete graphs factor through a single coefficient") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const Graph g = build_family("complete", {n});
    const FactorizationResult result = factorize(g);
    REQUIRE(result.coefficients.size() == 1);
    CHECK(result.product_error < 1e-8);
    CHECK(std::abs(result.coefficients[0]) > 1e-6);
  }
}

TEST_CASE("K_3 coefficient matches the projection-log oracle") {
  const Graph g = build_family("complete", {3});
  const FactorizationResult result = factorize(g);

  const ArcSpace space = build_arc_space(g);
  const Matrix oracle = generator_log_oracle(symmetric_eig(g.adjacency.to_real()), space);
  const Matrix basis = distance_digraphs_bfs(space).skew[1].to_real();
  const double t_oracle = trace_inner(oracle, basis) / trace_inner(basis, basis);

  CHECK(std::abs(result.coefficients[0] - t_oracle) < 1e-9);
  CHECK(std::abs(std::abs(result.coefficients[0]) - 4.0 * M_PI / (3.0 * std::sqrt(3.0))) < 1e-9);
}

TEST_CASE("Petersen factors into two nonzero commuting factors") {
  const FactorizationResult result = factorize(build_family("petersen", {}));
  REQUIRE(result.coefficients.size() == 2);
  CHECK(std::abs(result.coefficients[0]) > 1e-6);
  CHECK(std::abs(result.coefficients[1]) > 1e-6);
  CHECK(result.product_error < 1e-8);
  CHECK(result.gram_rank == 2);
  CHECK(verify_strongly_regular_claim(build_family("petersen", {}), result));
}

TEST_CASE("C_5 behaves as an invertible strongly regular case") {
  const Graph g = build_family("cycle", {5});
  const FactorizationResult result = factorize(g);
  REQUIRE(result.coefficients.size() == 2);
  CHECK(result.product_error < 1e-8);
  CHECK(verify_strongly_regular_claim(g, result));
}

TEST_CASE("strongly regular claim rejects other diameters") {
  const Graph q3 = build_family("hypercube", {3});
  const FactorizationResult result = factorize(q3);
  CHECK_THROWS_AS(verify_strongly_regular_claim(q3, result), ValidationError);
}

TEST_CASE("the 3-cube collapses to a single middle factor") {
  const Graph g = build_family("hypercube", {3});
  const FactorizationResult result = factorize(g);
  REQUIRE(result.coefficients.size() == 3);
  CHECK(std::abs(result.coefficients[0]) < 1e-9);
  CHECK(std::abs(result.coefficients[2]) < 1e-9);
  CHECK(std::abs(result.coefficients[1]) > 1e-6);

  const ArcSpace space = build_arc_space(g);
  const Matrix u = grover_walk(space).transition;
  const Matrix middle = distance_digraphs_bfs(space).skew[2].to_real();
  CHECK((u * u - expm_skew(middle, result.coefficients[1])).frobenius() < 1e-8);
}

TEST_CASE("factorize refuses bad hypotheses") {
  CHECK_THROWS_WITH_AS(factorize(build_family("prism", {})),
                       doctest::Contains("distance-regular"), ValidationError);
  CHECK_THROWS_WITH_AS(factorize(build_family("cycle", {4})), doctest::Contains("singular"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(factorize(build_family("complete_bipartite", {3})),
                       doctest::Contains("singular"), ValidationError);
}

TEST_CASE("gate necessity: the squared walk of C_4 has eigenvalue -1") {
  const Graph c4 = build_family("cycle", {4});
  const Matrix u = grover_walk(build_arc_space(c4)).transition;
  Matrix squared = u * u;
  Matrix sym = squared;
  sym += squared.transpose();
  sym *= 0.5;
  const SpectralDecomposition dec = symmetric_eig(sym);
  const double smallest = dec.pairs.back().value;
  CHECK(smallest == doctest::Approx(-1.0));
  CHECK_THROWS_AS(principal_log_orthogonal(squared), ValidationError);
}

TEST_CASE("factor order does not matter") {
  const FactorizationResult result = factorize(build_family("petersen", {}));
  const Matrix u = grover_walk(build_arc_space(build_family("petersen", {}))).transition;
  const Matrix squared = u * u;
  const Matrix forward = result.factors[0] * result.factors[1];
  const Matrix backward = result.factors[1] * result.factors[0];
  CHECK(std::abs((squared - forward).frobenius() - (squared - backward).frobenius()) < 1e-10);

  // Three factors: every permutation of the product lands on U^2 too.
  const FactorizationResult q3 = factorize(build_family("hypercube", {3}));
  const Matrix uq = grover_walk(build_arc_space(build_family("hypercube", {3}))).transition;
  const Matrix target = uq * uq;
  int order[3] = {0, 1, 2};
  do {
    const Matrix product = q3.factors[order[0]] * q3.factors[order[1]] * q3.factors[order[2]];
    CHECK((target - product).frobenius() < 1e-8);
  } while (std::next_permutation(order, order + 3));
}

TEST_CASE("coefficients match their closed forms") {
  // Derived by hand from the dual-eigenvalue expansion of each projector:
  // S_lambda = -(1/n) sum_i q_lambda(i) S(Y_{i+1}), with the zero-sum
  // relation eliminating the top index. Independent of the Gram solve.
  SUBCASE("complete graphs: t = 2 theta / ((n-1) sin theta)") {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(n);
      const double theta = std::acos(-1.0 / (n - 1));
      const double expected = 2.0 * theta / ((n - 1) * std::sin(theta));
      const FactorizationResult result = factorize(build_family("complete", {n}));
      CHECK(std::abs(result.coefficients[0] - expected) < 1e-12);
    }
  }
  SUBCASE("Petersen: (2 c_a + c_b)/3 and (c_a - c_b)/3") {
    const double c_a = std::acos(1.0 / 3.0) / std::sqrt(2.0);
    const double c_b = 2.0 * std::acos(-2.0 / 3.0) / std::sqrt(5.0);
    const FactorizationResult result = factorize(build_family("petersen", {}));
    CHECK(std::abs(result.coefficients[0] - (2.0 * c_a + c_b) / 3.0) < 1e-12);
    CHECK(std::abs(result.coefficients[1] - (c_a - c_b) / 3.0) < 1e-12);
  }
  SUBCASE("C_5 through the golden-ratio eigenvalues") {
    const double lambda_a = 2.0 * std::cos(2.0 * M_PI / 5.0);
    const double lambda_b = 2.0 * std::cos(4.0 * M_PI / 5.0);
    const double c_a = (2.0 * M_PI / 5.0) / std::sin(2.0 * M_PI / 5.0);
    const double c_b = (4.0 * M_PI / 5.0) / std::sin(4.0 * M_PI / 5.0);
    const FactorizationResult result = factorize(build_family("cycle", {5}));
    CHECK(std::abs(result.coefficients[0] -
                   (c_a * (2.0 - lambda_b) + c_b * (2.0 - lambda_a)) / 5.0) < 1e-12);
    CHECK(std::abs(result.coefficients[1] - (lambda_a - lambda_b) * (c_a - c_b) / 5.0) < 1e-12);
  }
  SUBCASE("the 3-cube middle coefficient is arccos(1/3)/sqrt(2)") {
    const FactorizationResult result = factorize(build_family("hypercube", {3}));
    CHECK(std::abs(result.coefficients[1] - std::acos(1.0 / 3.0) / std::sqrt(2.0)) < 1e-12);
  }
}

TEST_CASE("bipartite collapse generalizes: C_6 factors through S(Y_2) alone") {
  const FactorizationResult result = factorize(build_family("cycle", {6}));
  REQUIRE(result.coefficients.size() == 3);
  CHECK(std::abs(result.coefficients[0]) < 1e-9);
  CHECK(std::abs(result.coefficients[2]) < 1e-9);
  CHECK(std::abs(result.coefficients[1] - 2.0 * M_PI / (3.0 * std::sqrt(3.0))) < 1e-12);
  CHECK(result.product_error < 1e-8);
}

TEST_CASE("squared walk reconstructs from its eigenprojections") {
  const Graph g = build_family("petersen", {});
  const ArcSpace space = build_arc_space(g);
  const SpectralDecomposition dec = symmetric_eig(g.adjacency.to_real());
  const Matrix u = grover_walk(space).transition;
  const int arcs = space.arc_count();

  ComplexMatrix rebuilt(arcs, arcs);
  ComplexMatrix rest = ComplexMatrix::identity(arcs);
  for (const EigenPair& pair : dec.pairs) {
    if (g.degree - std::abs(pair.value) <= 1e-8 * g.degree) continue;
    const WalkEigenpair walk = walk_eigenprojections(pair, g.degree, space);
    const std::complex<double> phase = std::polar(1.0, 2.0 * walk.theta);
    rebuilt += phase * walk.projection_plus;
    rebuilt += std::conj(phase) * walk.projection_minus;
    rest -= walk.projection_plus;
    rest -= walk.projection_minus;
  }
  rebuilt += rest;  // the remaining eigenvalues of U are +-1, squaring to 1
  CHECK((rebuilt - (u * u).to_complex()).frobenius() < 1e-9);
}

TEST_SUITE_END();
