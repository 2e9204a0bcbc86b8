#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gt/golay.hpp"

using namespace gt;

TEST_CASE("tetracode basics")
{
  CHECK(tetracode().size() == 9);
  for (const TetraWord &w : tetracode()) {
    CHECK(tetra_is_member(w));
    int weight = 0;
    for (F3 c : w)
      weight += (c != 0);
    if (weight != 0)
      CHECK(weight == 3); // minimum (and only nonzero) weight
  }
  // kappa is an additive bijection onto F9.
  for (const TetraWord &x : tetracode())
    for (const TetraWord &y : tetracode())
      CHECK(tetra_kappa(tetra_add(x, y)) == tetra_kappa(x) + tetra_kappa(y));
  for (F9 z : f9_all())
    CHECK(tetra_kappa(tetra_kappa_inv(z)) == z);
}

TEST_CASE("lambda words")
{
  CHECK(lambda_word(1) == TetraWord{0, 1, 1, 1});
  CHECK(lambda_word(2) == TetraWord{1, 0, 1, 2});
  CHECK(lambda_word(3) == TetraWord{1, 2, 0, 1});
  CHECK(lambda_word(4) == TetraWord{1, 1, 2, 0});
}

TEST_CASE("code construction")
{
  GolayCode code = build_golay();
  CHECK(golay_bar_dimension() == 7);
  CHECK(code.codewords.size() == 729);

  // Dimension 6, containing every C_i + Gr(xi).
  for (int i = 1; i <= 4; ++i)
    for (const TetraWord &xi : tetracode())
      CHECK(code.contains(delta_add(col_vec(i), graph_vec(xi))));
  // Neither the C_i nor the Gr(xi) alone belong.
  for (int i = 1; i <= 4; ++i)
    CHECK(!code.contains(col_vec(i)));
  for (const TetraWord &xi : tetracode())
    CHECK(!code.contains(graph_vec(xi)));

  // Coordinates round trip.
  for (int idx = 0; idx < 729; ++idx)
    CHECK(code.codeword_index(code.codewords[static_cast<std::size_t>(idx)]) == idx);
}

TEST_CASE("self-duality and weight enumerator")
{
  GolayCode code = build_golay();
  for (const DeltaVec &x : code.basis)
    for (const DeltaVec &y : code.basis)
      CHECK(delta_dot(x, y) == 0);

  auto w = golay_weight_enumerator(code);
  CHECK(w[0] == 1);
  CHECK(w[6] == 264);
  CHECK(w[9] == 440);
  CHECK(w[12] == 24);
  for (int k : {1, 2, 3, 4, 5, 7, 8, 10, 11})
    CHECK(w[static_cast<std::size_t>(k)] == 0);
}

TEST_CASE("graph vector relation")
{
  CHECK(check_graph_relation());
}

TEST_CASE("Phi is well defined for every lambda sign choice")
{
  GolayCode code = build_golay();
  for (unsigned mask = 0; mask < 16; ++mask)
    CHECK(phi_well_defined(code, mask));
}

TEST_CASE("Phi maps the distinguished generators correctly")
{
  // Phi(C_1) = E22, Phi(Gr(0)) = E33.
  SymMat3 e22, e33;
  e22.set(1, 1, 1);
  e33.set(2, 2, 1);
  CHECK(phi_col_image(1) == e22);
  CHECK(phi_graph_image(tetra_word(0, 0)) == e33);
}

TEST_CASE("Phi is a bijection between the code and Sym3")
{
  GolayCode code = build_golay();
  PhiIso phi = phi_iso(code);

  std::array<bool, 729> hit{};
  for (const DeltaVec &w : code.codewords) {
    SymMat3 s = phi.apply(w);
    CHECK(!hit[static_cast<std::size_t>(s.index())]);
    hit[static_cast<std::size_t>(s.index())] = true;
    CHECK(phi.invert(s) == w);
  }

  // Linearity.
  for (int k = 0; k < 729; k += 37)
    for (int j = 0; j < 729; j += 41) {
      const DeltaVec &x = code.codewords[static_cast<std::size_t>(k)];
      const DeltaVec &y = code.codewords[static_cast<std::size_t>(j)];
      CHECK(phi.apply(delta_add(x, y)) == phi.apply(x).plus(phi.apply(y)));
    }

  // Recipe images: Phi(C_i + Gr(xi)) matches the outer-product recipe.
  for (int i = 1; i <= 4; ++i)
    for (const TetraWord &xi : tetracode())
      CHECK(phi.apply(delta_add(col_vec(i), graph_vec(xi))) ==
            phi_col_image(i).plus(phi_graph_image(xi)));
}

TEST_CASE("theta star elements have weight 12")
{
  GolayCode code = build_golay();
  PhiIso phi = phi_iso(code);

  SymMat3 th1, th2, th3;
  th1.set(0, 0, 1);
  th1.set(1, 1, 1);
  // [e1 (x) e2] = 2(E12 + E21) since 1/2 = 2 in F3.
  th2 = SymMat3::from_mat(MatF3::from_rows({{1, 2, 0}, {2, 2, 0}, {0, 0, 0}}));
  th3 = SymMat3::from_mat(MatF3::from_rows({{1, 1, 0}, {1, 2, 0}, {0, 0, 0}}));
  for (const SymMat3 &th : {th1, th2, th3})
    CHECK(delta_weight(phi.invert(th)) == 12);
}
