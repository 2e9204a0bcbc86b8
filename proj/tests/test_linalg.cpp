#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gt/linalg.hpp"

using namespace gt;

TEST_CASE("row reduction and rank")
{
  MatF3 m = MatF3::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
  CHECK(mat_rank(m) == 2);

  std::vector<int> pivots;
  MatF3 r = m;
  CHECK(row_reduce(r, &pivots) == 2);
  CHECK(pivots == std::vector<int>{0, 2});
  // Reduced form: pivot columns are elementary.
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(1, 0) == 0);
  CHECK(r.at(0, 2) == 0);
  CHECK(r.at(1, 2) == 1);
}

TEST_CASE("kernel basis solves the system")
{
  MatF3 m = MatF3::from_rows({{1, 1, 1, 0}, {0, 1, 2, 1}});
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const VecF3 &v : ker)
    CHECK(vec_is_zero(mat_apply(m, v)));
  CHECK(mat_rank(MatF3::from_rows(ker)) == 2);
}

TEST_CASE("inverse and determinant")
{
  MatF3 m = MatF3::from_rows({{1, 2, 0}, {0, 1, 1}, {1, 0, 0}});
  CHECK(mat_det(m) == 2);
  MatF3 inv = mat_inverse(m);
  CHECK(mat_mul(m, inv) == MatF3::identity(3));
  CHECK(mat_mul(inv, m) == MatF3::identity(3));

  MatF3 s = MatF3::from_rows({{1, 1}, {2, 2}});
  CHECK(mat_det(s) == 0);
  CHECK_THROWS(mat_inverse(s));

  // det is multiplicative on a sample.
  MatF3 p = MatF3::from_rows({{2, 1, 1}, {0, 2, 0}, {1, 0, 1}});
  CHECK(mat_det(mat_mul(m, p)) == f3_mul(mat_det(m), mat_det(p)));
}

TEST_CASE("jordan partitions of unipotent matrices")
{
  CHECK(jordan_partition(MatF3::identity(4)) == std::vector<int>{1, 1, 1, 1});

  MatF3 j3 = MatF3::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(jordan_partition(j3) == std::vector<int>{3});

  MatF3 j21 = MatF3::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(jordan_partition(j21) == std::vector<int>{2, 1});

  MatF3 j22 = MatF3::from_rows(
      {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  CHECK(jordan_partition(j22) == std::vector<int>{2, 2});

  MatF3 not_unip = MatF3::from_rows({{2, 0}, {0, 1}});
  CHECK_THROWS(jordan_partition(not_unip));
}

TEST_CASE("projective points")
{
  CHECK(projective_points(2).size() == 4);
  CHECK(projective_points(4).size() == 40);
  CHECK(projective_points(6).size() == 364);
  VecF3 v = {0, 2, 1};
  CHECK(projective_normalize(v) == VecF3{0, 1, 2});
  CHECK_THROWS(projective_normalize(VecF3{0, 0}));
}

TEST_CASE("symplectic form on F3^4")
{
  SymplecticForm f = standard_symplectic(4);
  VecF3 e1 = {1, 0, 0, 0}, e2 = {0, 1, 0, 0}, e3 = {0, 0, 1, 0}, e4 = {0, 0, 0, 1};
  CHECK(f.eval(e1, e3) == 1);
  CHECK(f.eval(e3, e1) == 2);
  CHECK(f.eval(e1, e2) == 0);
  CHECK(f.eval(e2, e4) == 1);
  CHECK(f.eval(e1, e1) == 0);
  CHECK(lagrangian_count(f) == 40);
  CHECK(hyperplane_count_f3_4() == 40);
}

TEST_CASE("quadratic form polarization")
{
  // q(x) = x1*x2 + x3^2 + x4^2, the minus-type form in dimension 4.
  MatF3 c(4, 4);
  c.at(0, 1) = 1;
  c.at(2, 2) = 1;
  c.at(3, 3) = 1;
  QuadraticForm q(c);
  CHECK(q.eval({1, 1, 0, 0}) == 1);
  CHECK(q.eval({0, 0, 1, 1}) == 2);
  // b(x,y) = q(x+y) - q(x) - q(y) is bilinear and symmetric.
  auto pts = projective_points(4);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      CHECK(q.polar(pts[a], pts[b]) == q.polar(pts[b], pts[a]));
  // Count of singular projective points of the minus-type form: 10.
  int singular = 0;
  for (const VecF3 &p : pts)
    singular += (q.eval(p) == 0);
  CHECK(singular == 10);
}
