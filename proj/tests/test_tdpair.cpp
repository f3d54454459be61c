#include <doctest.h>

#include "support.hpp"

using namespace tdq;
using namespace tdq::testing;

namespace {

Subspace sum_range(const std::vector<Subspace>& spaces, int lo, int hi) {
  Subspace acc = Subspace::zero(spaces.front().ambient_dim());
  for (int i = std::max(lo, 0); i <= hi && i < static_cast<int>(spaces.size()); ++i) acc = acc + spaces[i];
  return acc;
}

// (x - c) U_i within U_{i+step} (step = +-1), or (x - c) U_i = 0 when step is 0.
bool raises(const Matrix& x, const Decomposition& dec, int i, const Scalar& c, int step) {
  const auto target = step == 0 ? Subspace::zero(dec.ambient_dim()) : dec.at(i + step);
  return maps_into(shifted(x, c), dec.at(i), target);
}

}  // namespace

TEST_CASE("E1 passes every axiom with d = 1 and shape (1,1)") {
  const auto inst = e1_instance();
  const auto rep = verify_tridiagonal_pair(inst.A, inst.Astar, FieldConfig(2), 1, 1);
  CHECK(rep.passed());
  CHECK(rep.eigenvalue_strings);
  CHECK(rep.tridiagonal_astar_on_v);
  CHECK(rep.tridiagonal_a_on_vstar);
  CHECK(rep.diameter == 1);
  CHECK(rep.shape == ShapeVector{1, 1});
  CHECK(rep.algebra_dimension == 4);
  const auto pair = e1_pair();
  CHECK(pair.theta(0) == make_scalar(1, 2));
  CHECK(pair.theta(1) == 2);
  CHECK(pair.theta_star(0) == 2);
  CHECK(pair.V()[0] == span_of({{3, -2}}, 2));
  CHECK(pair.V()[1] == span_of({unit(2, 1)}, 2));
  CHECK(pair.Vstar()[0] == span_of({unit(2, 0)}, 2));
  CHECK(pair.Vstar()[1] == span_of({{2, -3}}, 2));
}

TEST_CASE("identity pair is reducible") {
  const auto rep = verify_tridiagonal_pair(Matrix::identity(2), Matrix::identity(2), FieldConfig(2), 1, 1);
  CHECK_FALSE(rep.passed());
  CHECK(rep.irreducibility == Irreducibility::Reducible);
  CHECK(rep.algebra_dimension == 1);
  CHECK_THROWS_AS(TridiagonalPair::verified(Matrix::identity(2), Matrix::identity(2), FieldConfig(2), 1, 1),
                  VerificationError);
}

TEST_CASE("wrong eigenvalues are reported as an eigenvalue-string failure") {
  auto inst = e1_instance();
  inst.A(0, 0) += 1;
  const auto rep = verify_tridiagonal_pair(inst.A, inst.Astar, FieldConfig(2), 1, 1);
  CHECK_FALSE(rep.eigenvalue_strings);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.front().starts_with("eigenvalue string"));
  // Same matrices, wrong a.
  const auto e1 = e1_instance();
  CHECK_FALSE(verify_tridiagonal_pair(e1.A, e1.Astar, FieldConfig(2), 3, 1).eigenvalue_strings);
  CHECK_FALSE(verify_tridiagonal_pair(e1.A, e1.Astar, FieldConfig(3), 1, 1).eigenvalue_strings);
}

TEST_CASE("input shape errors throw") {
  CHECK_THROWS_AS(verify_tridiagonal_pair(Matrix::identity(2), Matrix::identity(3), FieldConfig(2), 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_tridiagonal_pair(Matrix(2, 3), Matrix(2, 3), FieldConfig(2), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_tridiagonal_pair(Matrix::identity(2), Matrix::identity(2), FieldConfig(2), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("one-dimensional pair is accepted with d = 0") {
  const Matrix a{{make_scalar(3)}}, as{{make_scalar(-2, 7)}};
  const auto pair = TridiagonalPair::verified(a, as, FieldConfig(5), 3, make_scalar(-2, 7));
  CHECK(pair.diameter() == 0);
  CHECK(shape(pair) == ShapeVector{1});
  for (const auto& dec : six_decompositions(pair)) CHECK(dec.dimensions() == std::vector<std::size_t>{1});
}

TEST_CASE("generic tensor of two d = 1 modules has d = 2 and shape (1,2,1)") {
  const auto pair = module_pair("1:1,1:3", 2);
  CHECK(pair.diameter() == 2);
  CHECK(shape(pair) == ShapeVector{1, 2, 1});
}

TEST_CASE("evaluation modules give Leonard pairs") {
  for (int d = 1; d <= 4; ++d) {
    for (auto v : {Variant::Minus, Variant::Plus}) {
      const auto pair = module_pair("" + std::to_string(d) + ":3", make_scalar(1, 2), v);
      CHECK(pair.diameter() == d);
      CHECK(shape(pair) == ShapeVector(static_cast<std::size_t>(d + 1), 1));
    }
  }
}

TEST_CASE("symmetric unimodal shapes") {
  CHECK(is_symmetric_unimodal({1}));
  CHECK(is_symmetric_unimodal({1, 2, 1}));
  CHECK(is_symmetric_unimodal({1, 2, 2, 1}));
  CHECK(is_symmetric_unimodal({1, 3, 3, 1}));
  CHECK_FALSE(is_symmetric_unimodal({1, 2}));
  CHECK_FALSE(is_symmetric_unimodal({2, 1, 2}));
}

TEST_CASE("standard ordering search") {
  const auto e1 = e1_instance();
  const auto ord = standard_ordering_search(e1.A, e1.Astar);
  REQUIRE(ord);
  CHECK(ord->eigenvalues == std::vector<Scalar>{make_scalar(1, 2), 2});
  // The other orientation also satisfies the tridiagonal condition (d = 1 is
  // always a path), and the smaller-first one is the one reported.
  const Matrix diag = Matrix::diagonal(std::vector<Scalar>{make_scalar(1, 2), 2});
  const auto generic = standard_ordering_search(diag, Matrix{{1, 2}, {3, 4}});
  REQUIRE(generic);
  CHECK(generic->eigenvalues.front() == make_scalar(1, 2));
  // A* couples every pair of eigenspaces: a triangle, not a path.
  const Matrix a3 = Matrix::diagonal(std::vector<Scalar>{1, 2, 3});
  const Matrix ones{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  CHECK_FALSE(standard_ordering_search(a3, ones));
  // A path 0 - 2 - 1 comes back in path order.
  const Matrix path{{0, 0, 1}, {0, 0, 1}, {1, 1, 0}};
  const auto p = standard_ordering_search(a3, path);
  REQUIRE(p);
  CHECK(p->eigenvalues == std::vector<Scalar>{1, 3, 2});
}

TEST_CASE("E1 decompositions") {
  const auto pair = e1_pair();
  const auto decs = six_decompositions(pair);
  REQUIRE(decs.size() == 6);
  CHECK(decs[0].subspaces == pair.V());
  CHECK(decs[1].subspaces == pair.Vstar());
  CHECK(decs[2].subspaces == std::vector<Subspace>{span_of({unit(2, 0)}, 2), span_of({unit(2, 1)}, 2)});
  CHECK(decs[3].subspaces == std::vector<Subspace>{span_of({unit(2, 0)}, 2), span_of({{3, -2}}, 2)});
}

TEST_CASE("decompositions match their intersection definitions and the action tables") {
  for (const auto& factors : {"1:1,1:3", "1:1,2:5", "3:2"}) {
    const auto pair = module_pair(factors, 3);
    const int d = pair.diameter();
    const auto& v = pair.V();
    const auto& vs = pair.Vstar();
    const auto decs = six_decompositions(pair);
    for (int i = 0; i <= d; ++i) {
      CHECK(decs[2].at(i) == subspace_intersect(sum_range(vs, 0, i), sum_range(v, i, d)));
      CHECK(decs[3].at(i) == subspace_intersect(sum_range(vs, 0, i), sum_range(v, 0, d - i)));
      CHECK(decs[4].at(i) == subspace_intersect(sum_range(vs, d - i, d), sum_range(v, 0, d - i)));
      CHECK(decs[5].at(i) == subspace_intersect(sum_range(vs, d - i, d), sum_range(v, i, d)));
    }
    for (const auto& dec : decs) {
      CHECK(dec.is_decomposition());
      CHECK(dec.dimensions() == shape(pair));
    }
    const auto& A = pair.A();
    const auto& As = pair.Astar();
    for (int i = 0; i <= d; ++i) {
      CHECK(raises(A, decs[0], i, pair.theta(i), 0));
      CHECK(raises(As, decs[1], i, pair.theta_star(i), 0));
      CHECK(raises(A, decs[2], i, pair.theta(i), +1));
      CHECK(raises(As, decs[2], i, pair.theta_star(i), -1));
      CHECK(raises(A, decs[3], i, pair.theta(d - i), +1));
      CHECK(raises(As, decs[3], i, pair.theta_star(i), -1));
      CHECK(raises(A, decs[4], i, pair.theta(d - i), +1));
      CHECK(raises(As, decs[4], i, pair.theta_star(d - i), -1));
      CHECK(raises(A, decs[5], i, pair.theta(i), +1));
      CHECK(raises(As, decs[5], i, pair.theta_star(d - i), -1));
    }
    CHECK(audit_decompositions(pair, decs).empty());
  }
}

TEST_CASE("generated algebra dimension examples") {
  CHECK(generated_algebra_dimension(Matrix::identity(2), Matrix::identity(2)) == 1);
  const auto e1 = e1_instance();
  CHECK(generated_algebra_dimension(e1.A, e1.Astar) == 4);
  const Matrix d1 = Matrix::diagonal(std::vector<Scalar>{1, 2});
  const Matrix d2 = Matrix::diagonal(std::vector<Scalar>{3, 4});
  CHECK(generated_algebra_dimension(d1, d2) == 2);
  CHECK(classify_irreducibility(d1, d2).verdict == Irreducibility::Reducible);
}

TEST_CASE("Burnside certificate agrees with exhaustive kernel invariance for n <= 4") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    Matrix x = random_matrix(rng, n, n), y = random_matrix(rng, n, n);
    if (trial % 2) {
      // Block upper triangular in a random basis: span(P e_0..e_{k-1}) is invariant.
      const std::size_t k = 1 + trial % (n - 1);
      for (std::size_t r = k; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) x(r, c) = y(r, c) = 0;
      }
      const Matrix p = random_matrix(rng, n, n);
      if (!p.is_invertible()) continue;
      x = p * x * p.inverse();
      y = p * y * p.inverse();
    }
    const auto basis = generated_algebra_basis(x, y);
    const auto res = classify_irreducibility(x, y);
    CHECK(res.algebra_dimension == basis.size());
    const Matrix gens[] = {x, y};
    if (basis.size() == n * n) {
      CHECK(res.verdict == Irreducibility::Irreducible);
      for (const auto& m : basis) {
        const Subspace k = kernel(m);
        if (k.is_zero() || k.is_full()) continue;
        CHECK_FALSE((maps_into(x, k, k) && maps_into(y, k, k)));
      }
      for (std::size_t i = 0; i < n; ++i) CHECK(spin(unit(n, i), gens).is_full());
    } else {
      CHECK(res.verdict != Irreducibility::Irreducible);
      if (res.verdict == Irreducibility::Reducible) {
        REQUIRE(res.invariant_subspace);
        const auto& w = *res.invariant_subspace;
        CHECK_FALSE(w.is_zero());
        CHECK_FALSE(w.is_full());
        CHECK(maps_into(x, w, w));
        CHECK(maps_into(y, w, w));
      }
    }
    if (trial % 2) CHECK(basis.size() < n * n);
  }
}

TEST_CASE("random matrices are rejected") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rep = verify_tridiagonal_pair(random_matrix(rng, 3, 3), random_matrix(rng, 3, 3), FieldConfig(2), 1, 1);
    CHECK_FALSE(rep.passed());
  }
}
