#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gt/mathieu.hpp"

using namespace gt;

TEST_CASE("theta* elements are the weight-12 codewords in the column span")
{
  const Mat12 &d = mat12_data();
  const MathieuData &m = mathieu_data();

  // The span of the C_i is 4-dimensional; collect its 81 elements.
  std::vector<DeltaVec> span;
  for (int a = 0; a < 81; ++a) {
    DeltaVec v{};
    int t = a;
    for (int i = 1; i <= 4; ++i) {
      v = delta_add(v, delta_scale(static_cast<F3>(t % 3), col_vec(i)));
      t /= 3;
    }
    span.push_back(v);
  }

  std::vector<DeltaVec> heavy;
  for (const DeltaVec &v : span)
    if (d.code.contains(v) && delta_weight(v) == 12)
      heavy.push_back(v);
  CHECK(heavy.size() == 6);
  for (int i = 0; i < 3; ++i) {
    const DeltaVec &s = m.star[static_cast<std::size_t>(i)];
    CHECK(delta_weight(s) == 12);
    CHECK(std::count(heavy.begin(), heavy.end(), s) == 1);
    CHECK(std::count(heavy.begin(), heavy.end(), delta_neg(s)) == 1);
  }
}

TEST_CASE("subgroup orders")
{
  const MathieuData &m = mathieu_data();
  CHECK(m.twoM11.size() == 15840);
  CHECK(m.twoM10.size() == 2880);
  CHECK(m.M0_11.size() == 7920);
  CHECK(m.M0_10.size() == 360);
  CHECK(m.T.size() == 9);
  CHECK(m.Nhat.size() == 288);
  CHECK(m.Nhat_M0_11.size() == 144);
  CHECK(m.Nhat_M0_10.size() == 36);
}

TEST_CASE("Nhat and its intersections have the stated generators")
{
  const MathieuData &m = mathieu_data();
  MonMap neg = MonMap::neg_identity();

  KeySet nhat = subgroup_closure({dpar(f9(1)), dpar(f9_i()), sbk(f9_zeta()), sbk_phi(), neg});
  CHECK(nhat.elems == m.Nhat.elems);

  KeySet n10 = subgroup_closure({dpar(f9(1)), dpar(f9_i()), neg.after(sbk(f9_i()))});
  CHECK(n10.elems == m.Nhat_M0_10.elems);

  KeySet n11 =
      subgroup_closure({dpar(f9(1)), dpar(f9_i()), neg.after(sbk(f9_zeta())), sbk_phi()});
  CHECK(n11.elems == m.Nhat_M0_11.elems);
}

TEST_CASE("M0 is the normal closure of the Sylow 3-subgroup T")
{
  const MathieuData &m = mathieu_data();
  // T has order 9 and index prime to 3 in both stabilizers, so it is a
  // Sylow 3-subgroup and its normal closure is the subgroup generated by
  // all elements of 3-power order.
  CHECK(m.twoM11.size() % 9 == 0);
  CHECK((m.twoM11.size() / 9) % 3 != 0);
  CHECK(m.twoM10.size() % 9 == 0);
  CHECK((m.twoM10.size() / 9) % 3 != 0);
  for (std::uint64_t k : m.T.elems) {
    CHECK(m.twoM11.contains(k));
    CHECK(m.twoM10.contains(k));
  }

  std::vector<MonMap> t_gens = {dpar(f9(1)), dpar(f9_i())};
  CHECK(normal_closure(m.twoM11_gens, t_gens).elems == m.M0_11.elems);
  CHECK(normal_closure(m.twoM10_gens, t_gens).elems == m.M0_10.elems);
}

TEST_CASE("action on the theta* matches the table")
{
  CHECK(check_acttheta());
}

TEST_CASE("M0_11 and M0_10 are simple of orders 7920 and 360")
{
  const MathieuData &m = mathieu_data();
  CHECK(is_simple_group(m.M0_11_gens, m.M0_11));
  CHECK(is_simple_group(m.M0_10_gens, m.M0_10));
}

TEST_CASE("quotients by M0 are C2 and D8")
{
  const MathieuData &m = mathieu_data();
  CHECK(quotient_is_c2(m.twoM11_gens, m.twoM11, m.M0_11));
  CHECK(quotient_is_d8(m.twoM10_gens, m.twoM10, m.M0_10));
}

TEST_CASE("coset actions on Nhat are primitive of degrees 10 and 55")
{
  const MathieuData &m = mathieu_data();
  CosetAction a10 = coset_action(m.twoM10_gens, m.Nhat, 10);
  CHECK(a10.degree == 10);
  CHECK(is_primitive(a10));
  CosetAction a55 = coset_action(m.twoM11_gens, m.Nhat, 55);
  CHECK(a55.degree == 55);
  CHECK(is_primitive(a55));
}

TEST_CASE("quotient maps are linear surjections with the right kernels")
{
  const MathieuData &m = mathieu_data();

  int zero10 = 0, zero11 = 0;
  std::unordered_set<int> image10, image11;
  for (int idx = 0; idx < 729; ++idx) {
    SymMat3 s = SymMat3::from_index(idx);
    Todd10 t10 = kappa10(s);
    Todd11 t11 = kappa11(s);
    zero10 += (t10 == Todd10{});
    zero11 += (t11 == Todd11{});
    image10.insert(t10.a * 27 + f9_index(t10.b) * 3 + t10.c);
    image11.insert(t11.a * 81 + f9_index(t11.b) * 9 + f9_index(t11.c));
  }
  CHECK(zero10 == 9);   // kernel = Phi(K2), dimension 2
  CHECK(zero11 == 3);   // kernel = Phi(K1), dimension 1
  CHECK(image10.size() == 81);
  CHECK(image11.size() == 243);

  CHECK(kappa11(m.theta[0]) == Todd11{});
  CHECK(kappa10(m.theta[1]) == Todd10{});
  CHECK(kappa10(m.theta[2]) == Todd10{});

  // Additivity on a sample of pairs.
  for (int a = 0; a < 729; a += 31)
    for (int b = 0; b < 729; b += 37) {
      SymMat3 x = SymMat3::from_index(a), y = SymMat3::from_index(b);
      SymMat3 s = x.plus(y);
      Todd11 lhs = kappa11(s);
      Todd11 xs = kappa11(x), ys = kappa11(y);
      CHECK(lhs == Todd11{f3_add(xs.a, ys.a), xs.b + ys.b, xs.c + ys.c});
      Todd10 l0 = kappa10(s);
      Todd10 x0 = kappa10(x), y0 = kappa10(y);
      CHECK(l0 == Todd10{f3_add(x0.a, y0.a), x0.b + y0.b, f3_add(x0.c, y0.c)});
    }
}

TEST_CASE("coordinate actions match the action on the code")
{
  CHECK(check_todd10_equivariance());
  CHECK(check_todd11_equivariance());
}

TEST_CASE("dual pairing is nondegenerate and contravariant")
{
  CHECK(check_todd_pairing());
}
