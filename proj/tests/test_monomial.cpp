#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gt/monomial.hpp"

using namespace gt;

TEST_CASE("monomial map algebra")
{
  MonMap id = MonMap::identity();
  MonMap m = trs(tetra_kappa_inv(f9_zeta()));
  CHECK(m.after(m.inverse()) == id);
  CHECK(m.inverse().after(m) == id);
  CHECK(MonMap::from_key(m.key()) == m);
  CHECK(MonMap::neg_identity().after(MonMap::neg_identity()) == id);

  // apply is compatible with composition.
  DeltaVec v = col_vec(2);
  MonMap n = tau(tetra_automorphisms()[5]);
  CHECK(n.after(m).apply(v) == n.apply(m.apply(v)));
}

TEST_CASE("tetracode automorphism group has order 48")
{
  CHECK(tetra_automorphisms().size() == 48);
}

TEST_CASE("translations form a homomorphic image of the tetracode")
{
  for (const TetraWord &x : tetracode())
    for (const TetraWord &y : tetracode())
      CHECK(trs(tetra_add(x, y)) == trs(x).after(trs(y)));
}

TEST_CASE("tau acts on graph vectors through the column action")
{
  for (const ColMonomial &a : tetra_automorphisms())
    for (const TetraWord &xi : tetracode())
      CHECK(tau(a).apply(graph_vec(xi)) == graph_vec(a.apply_word(xi)));
}

TEST_CASE("scalar and Frobenius automorphisms")
{
  for (F9 u : f9_units()) {
    ColMonomial a = scalar_aut(u);
    for (const TetraWord &w : tetracode())
      CHECK(tetra_kappa(a.apply_word(w)) == u * tetra_kappa(w));
  }
  ColMonomial f = frobenius_aut();
  for (const TetraWord &w : tetracode())
    CHECK(tetra_kappa(f.apply_word(w)) == f9_conj(tetra_kappa(w)));
  CHECK_THROWS(scalar_aut(f9(0)));
}

TEST_CASE("group orders: N0, N, full stabilizer")
{
  const Mat12 &d = mat12_data();
  CHECK(d.N0.size() == 432);
  CHECK(d.N.size() == 864);
  CHECK(d.G.size() == 190080);
  CHECK(d.N.contains(MonMap::neg_identity()));
  for (std::uint64_t k : d.N.elems)
    CHECK(d.G.contains(k));
}

TEST_CASE("every stabilizer element preserves the code")
{
  const Mat12 &d = mat12_data();
  int step = 0;
  for (std::uint64_t k : d.G.elems) {
    if (++step % 97 != 0)
      continue; // sample; full preservation is forced by generation
    MonMap g = MonMap::from_key(k);
    for (const DeltaVec &b : d.code.basis)
      CHECK(d.code.contains(g.apply(b)));
  }
  MonMap e = d.extra;
  CHECK(!d.N.contains(e));
  for (const DeltaVec &b : d.code.basis)
    CHECK(d.code.contains(e.apply(b)));
}

TEST_CASE("N is exactly the set of column-permuting stabilizer elements")
{
  const Mat12 &d = mat12_data();
  std::size_t count = 0;
  for (std::uint64_t k : d.G.elems) {
    bool col = MonMap::from_key(k).is_column_permutation();
    CHECK(col == d.N.contains(k));
    count += col;
  }
  CHECK(count == 864);
}

TEST_CASE("Theta is an isomorphism onto a 432-element matrix group")
{
  const Mat12 &d = mat12_data();
  CHECK(d.theta.fwd.size() == 432);
  CHECK(d.theta.rev.size() == 432);

  // Homomorphism spot check over a deterministic sample of pairs.
  std::vector<std::uint64_t> keys = d.N0.elems;
  for (std::size_t a = 0; a < keys.size(); a += 29)
    for (std::size_t b = 0; b < keys.size(); b += 31) {
      MonMap x = MonMap::from_key(keys[a]);
      MonMap y = MonMap::from_key(keys[b]);
      CHECK(d.theta.matrix_of(x.after(y)) ==
            mat_mul(d.theta.matrix_of(x), d.theta.matrix_of(y)));
    }

  // Image shape: block upper triangular with last row (0,0,1).
  for (std::uint64_t k : keys) {
    MatF3 m = d.theta.matrix_of(MonMap::from_key(k));
    CHECK(m.at(2, 0) == 0);
    CHECK(m.at(2, 1) == 0);
    CHECK(m.at(2, 2) == 1);
  }
}

TEST_CASE("Theta equivariance for the Phi identification")
{
  const Mat12 &d = mat12_data();
  // Phi(beta v) = Theta(beta) Phi(v) Theta(beta)^T for all beta in N0,
  // checked on the 6 reduced basis codewords (linearity gives the rest).
  for (std::uint64_t k : d.N0.elems) {
    MonMap beta = MonMap::from_key(k);
    MatF3 t = d.theta.matrix_of(beta);
    MatF3 tt = mat_transpose(t);
    for (const DeltaVec &b : d.code.rref) {
      MatF3 lhs = d.phi.apply(beta.apply(b)).to_mat();
      MatF3 rhs = mat_mul(mat_mul(t, d.phi.apply(b).to_mat()), tt);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("coset action of the stabilizer on N has degree 220 and is primitive")
{
  const Mat12 &d = mat12_data();
  KeySet n = KeySet::from(d.N.elems);
  CosetAction act = coset_action(d.G.gens, n, 220);
  CHECK(act.degree == 220);
  CHECK(is_transitive(act));
  CHECK(is_primitive(act));
}

TEST_CASE("N is the normalizer of the translation group")
{
  const Mat12 &d = mat12_data();
  std::vector<MonMap> t_gens = {trs(tetra_kappa_inv(f9(1))), trs(tetra_kappa_inv(f9_i()))};
  KeySet t = subgroup_closure(t_gens);
  CHECK(t.size() == 9);
  KeySet nrm = normalizer_scan(d.G, t_gens, t);
  CHECK(nrm.size() == 864);
  for (std::uint64_t k : nrm.elems)
    CHECK(d.N.contains(k));
}

TEST_CASE("order-3 classes: two classes with the expected Jordan shapes")
{
  const Mat12 &d = mat12_data();
  auto classes = order3_class_data(d);
  REQUIRE(classes.size() == 2);
  std::vector<std::vector<int>> jordans = {classes[0].jordan, classes[1].jordan};
  std::sort(jordans.begin(), jordans.end());
  CHECK(jordans[0] == std::vector<int>{3, 2, 1});
  CHECK(jordans[1] == std::vector<int>{3, 3});
  CHECK(max_order3_fixed_rank(d) == 3);
}

TEST_CASE("projective orbits of the stabilizer are the weight classes")
{
  const Mat12 &d = mat12_data();
  // Weight is preserved, so the orbits can be at most the weight classes
  // 264/2 = 132 (weight 6), 440/2 = 220 (weight 9), 24/2 = 12 (weight 12);
  // transitivity on each class makes the orbit lengths exactly that.
  auto lengths = orbit_lengths_on_projective(d, d.G.gens);
  CHECK(lengths == std::vector<int>{12, 132, 220});
}

TEST_CASE("find_generators reproduces a subgroup")
{
  const Mat12 &d = mat12_data();
  auto gens = find_generators(d.N0.elems);
  KeySet again = subgroup_closure(gens);
  CHECK(again.size() == d.N0.size());
}
