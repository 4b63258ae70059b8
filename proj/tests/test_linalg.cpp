#include "dqwalk/errors.hpp"
#include "dqwalk/graph.hpp"
#include "dqwalk/linalg.hpp"
#include "dqwalk/matrix.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dqw;

namespace {

Matrix random_symmetric(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = dist(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

Matrix random_integer_skew(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = dist(rng);
      s(i, j) = v;
      s(j, i) = -v;
    }
  return s;
}

const EigenPair& pair_for(const SpectralDecomposition& dec, double value) {
  for (const EigenPair& pair : dec.pairs)
    if (std::abs(pair.value - value) < 1e-6) return pair;
  REQUIRE(false);
  return dec.pairs.front();
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("integer matrix arithmetic is exact") {
  IntMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  IntMatrix b = a * a;
  CHECK(b(0, 0) == 7);
  CHECK(b(0, 1) == 10);
  CHECK(b(1, 0) == 15);
  CHECK(b(1, 1) == 22);
  CHECK(a.transpose().transpose() == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("determinant by LU") {
  Matrix m(3, 3);
  m(0, 0) = 2;
  m(1, 1) = 3;
  m(2, 2) = 4;
  m(0, 2) = 1;
  CHECK(determinant(m) == doctest::Approx(24.0));
  CHECK(determinant(Matrix::identity(5)) == doctest::Approx(1.0));
}

TEST_CASE("symmetric_eig of the identity") {
  const SpectralDecomposition dec = symmetric_eig(Matrix::identity(3));
  REQUIRE(dec.pairs.size() == 1);
  CHECK(dec.pairs[0].value == doctest::Approx(1.0));
  CHECK(dec.pairs[0].multiplicity == 3);
  CHECK((dec.pairs[0].projector - Matrix::identity(3)).frobenius() < 1e-12);
}

TEST_CASE("symmetric_eig of K_3") {
  const Graph g = build_family("complete", {3});
  const SpectralDecomposition dec = symmetric_eig(g.adjacency.to_real());
  REQUIRE(dec.pairs.size() == 2);
  CHECK(dec.pairs[0].value == doctest::Approx(2.0));
  CHECK(dec.pairs[0].multiplicity == 1);
  CHECK(dec.pairs[1].value == doctest::Approx(-1.0));
  CHECK(dec.pairs[1].multiplicity == 2);
}

TEST_CASE("Petersen spectrum against the characteristic polynomial oracle") {
  const Graph g = build_family("petersen", {});
  // Independent oracle: exact characteristic polynomial must factor as
  // (x-3)(x-1)^5(x+2)^4.
  CHECK(oracles::char_poly(g.adjacency) == oracles::poly_from_roots({{3, 1}, {1, 5}, {-2, 4}}));

  const SpectralDecomposition dec = symmetric_eig(g.adjacency.to_real());
  REQUIRE(dec.pairs.size() == 3);
  CHECK(dec.pairs[0].value == doctest::Approx(3.0));
  CHECK(dec.pairs[0].multiplicity == 1);
  CHECK(dec.pairs[1].value == doctest::Approx(1.0));
  CHECK(dec.pairs[1].multiplicity == 5);
  CHECK(dec.pairs[2].value == doctest::Approx(-2.0));
  CHECK(dec.pairs[2].multiplicity == 4);
}

TEST_CASE("symmetric_eig rejects bad input") {
  CHECK_THROWS_AS(symmetric_eig(Matrix(2, 3)), ValidationError);
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 0.5;
  CHECK_THROWS_AS(symmetric_eig(m), ValidationError);
}

TEST_CASE("spectral decomposition invariants on random symmetric matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + trial;
    const Matrix m = random_symmetric(rng, n);
    const SpectralDecomposition dec = symmetric_eig(m);
    Matrix id_sum(n, n), rebuilt(n, n);
    for (const EigenPair& pair : dec.pairs) {
      id_sum += pair.projector;
      rebuilt += pair.value * pair.projector;
    }
    CHECK((id_sum - Matrix::identity(n)).frobenius() < 1e-9);
    CHECK((rebuilt - m).frobenius() < 1e-9 * (1.0 + m.frobenius()));
    for (std::size_t r = 0; r < dec.pairs.size(); ++r)
      for (std::size_t s = r + 1; s < dec.pairs.size(); ++s)
        CHECK((dec.pairs[r].projector * dec.pairs[s].projector).frobenius() < 1e-9);
  }
}

TEST_CASE("expm_skew at t = 0 is the identity") {
  Matrix s(4, 4);
  s(0, 1) = 2.0;
  s(1, 0) = -2.0;
  s(2, 3) = -1.0;
  s(3, 2) = 1.0;
  CHECK((expm_skew(s, 0.0) - Matrix::identity(4)).frobenius() < 1e-15);
}

TEST_CASE("expm_skew reproduces the 2x2 rotation") {
  Matrix s(2, 2);
  s(0, 1) = 1.0;
  s(1, 0) = -1.0;
  const Matrix r = expm_skew(s, M_PI / 2.0);
  CHECK(r(0, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r(0, 1) == doctest::Approx(1.0));
  CHECK(r(1, 0) == doctest::Approx(-1.0));
  CHECK(r(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("expm_skew group laws on random integer skew matrices") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 4 + 3 * trial;  // up to 25
    const Matrix s = random_integer_skew(rng, n);
    const double a = time(rng), b = time(rng);
    CHECK((expm_skew(s, a) * expm_skew(s, -a) - Matrix::identity(n)).frobenius() < 1e-9);
    CHECK((expm_skew(s, a) * expm_skew(s, b) - expm_skew(s, a + b)).frobenius() < 1e-9);
  }
}

TEST_CASE("expm_skew rejects non-skew input") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = -0.5;
  CHECK_THROWS_AS(expm_skew(m, 1.0), ValidationError);
}

TEST_CASE("expand_in_basis recovers an exact member") {
  std::mt19937 rng(3);
  const Matrix b1 = random_symmetric(rng, 4);
  const Matrix b2 = random_symmetric(rng, 4);
  const BasisExpansion e = expand_in_basis(b1, {b1, b2});
  CHECK(e.coefficients[0] == doctest::Approx(1.0));
  CHECK(std::abs(e.coefficients[1]) < 1e-10);
  CHECK(e.residual < 1e-10);
  CHECK(e.gram_rank == 2);
}

TEST_CASE("expand_in_basis of zero is zero") {
  std::mt19937 rng(4);
  const Matrix b1 = random_symmetric(rng, 4);
  const BasisExpansion e = expand_in_basis(Matrix(4, 4), {b1});
  CHECK(e.coefficients[0] == 0.0);
  CHECK(e.residual == 0.0);
}

TEST_CASE("expand_in_basis handles a dependent basis") {
  std::mt19937 rng(5);
  const Matrix b = random_symmetric(rng, 4);
  const Matrix twice = 2.0 * b;
  const BasisExpansion e = expand_in_basis(b, {b, twice});
  CHECK(e.gram_rank == 1);
  CHECK(e.residual < 1e-10);
  // One pivot, the other coefficient stays zero.
  const int nonzero = (e.coefficients[0] != 0.0) + (e.coefficients[1] != 0.0);
  CHECK(nonzero == 1);
}

TEST_CASE("expand_in_basis re-expansion is a projection") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix b1 = random_symmetric(rng, 5);
    const Matrix b2 = random_symmetric(rng, 5);
    const Matrix k = random_symmetric(rng, 5);
    const BasisExpansion first = expand_in_basis(k, {b1, b2});
    Matrix projected(5, 5);
    projected += first.coefficients[0] * b1;
    projected += first.coefficients[1] * b2;
    CHECK(expand_in_basis(projected, {b1, b2}).residual < 1e-10);
  }
}

TEST_CASE("expand_in_basis rejects shape mismatches and empty bases") {
  CHECK_THROWS_AS(expand_in_basis(Matrix(2, 2), {}), ValidationError);
  CHECK_THROWS_AS(expand_in_basis(Matrix(2, 2), {Matrix(3, 3)}), ValidationError);
}

TEST_CASE("principal_log_orthogonal inverts small rotations") {
  Matrix s(2, 2);
  s(0, 1) = 1.0;
  s(1, 0) = -1.0;
  const Matrix q = expm_skew(s, 0.7);
  const Matrix log = principal_log_orthogonal(q);
  CHECK(log(0, 1) == doctest::Approx(0.7));
  CHECK((expm_skew(log, 1.0) - q).frobenius() < 1e-10);
}

TEST_CASE("principal_log_orthogonal round trip on random small skews") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 4 + 2 * trial;
    // Scale down so every rotation angle stays inside the principal branch.
    Matrix s = random_integer_skew(rng, n);
    s *= 0.05;
    const Matrix q = expm_skew(s, 1.0);
    CHECK((principal_log_orthogonal(q) - s).frobenius() < 1e-9);
  }
}

TEST_CASE("principal_log_orthogonal rejects non-orthogonal input") {
  Matrix m = Matrix::identity(3);
  m(0, 0) = 2.0;
  CHECK_THROWS_AS(principal_log_orthogonal(m), ValidationError);
}

TEST_CASE("eigenpair for a named value helper behaves") {
  const Graph g = build_family("complete", {4});
  const SpectralDecomposition dec = symmetric_eig(g.adjacency.to_real());
  CHECK(pair_for(dec, -1.0).multiplicity == 3);
}

TEST_SUITE_END();
